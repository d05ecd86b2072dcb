#include <gtest/gtest.h>

#include "indigenous/errors.hpp"
#include "indigenous/finite_semiring.hpp"
#include "indigenous/localization.hpp"

namespace indigenous {
namespace {

const Elem m = Elem::many();
Elem n(std::uint32_t v) { return Elem::fin(v); }

TEST(Localization, FrozenMultiplicativeSetCounts) {
  const std::vector<std::size_t> expected{2, 3, 5, 7, 13, 23, 45, 77};
  for (std::uint32_t k = 1; k <= expected.size(); ++k) {
    EXPECT_EQ(multiplicative_sets(SemiringCtx(k)).size(), expected[k - 1]) << "k=" << k;
  }
}

TEST(Localization, TrivialSetReproducesTheSemiring) {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    const SemiringCtx ctx(k);
    const auto l = localize(ctx, {n(1)});
    EXPECT_EQ(l.class_count(), k + 2);
    EXPECT_TRUE(find_isomorphism(l.tables(), tables_of(ctx)).has_value());
  }
}

TEST(Localization, EveryOtherSetGivesTheBooleanSemiring) {
  for (std::uint32_t k = 2; k <= 8; ++k) {
    const SemiringCtx ctx(k);
    for (const auto& u : multiplicative_sets(ctx)) {
      const auto l = localize(ctx, u);
      EXPECT_TRUE(is_entire(l.tables()));
      EXPECT_TRUE(is_zerosumfree(l.tables()));
      if (u.size() == 1) continue;
      EXPECT_EQ(l.class_count(), 2u) << "k=" << k << " U={" << join(u) << "}";
      EXPECT_TRUE(find_isomorphism(l.tables(), boolean_semiring()).has_value());
    }
  }
}

TEST(Localization, FractionClasses) {
  const SemiringCtx ctx(4);
  const auto l = localize(ctx, {n(1), n(2), n(4), m});
  EXPECT_TRUE(l.equivalent({n(1), n(1)}, {m, m}));
  EXPECT_TRUE(l.equivalent({n(3), n(2)}, {n(1), n(1)}));
  EXPECT_FALSE(l.equivalent({Elem::zero(), n(1)}, {n(1), n(1)}));
  EXPECT_EQ(l.class_of({Elem::zero(), n(2)}), l.zero_class());
  EXPECT_EQ(l.class_of({n(3), m}), l.one_class());
  EXPECT_THROW(l.class_of({n(1), n(3)}), InvalidArgument);
}

TEST(Localization, RejectsInvalidSets) {
  const SemiringCtx ctx(4);
  EXPECT_THROW(localize(ctx, {n(1), n(2)}), InvalidArgument);
  EXPECT_THROW(localize(ctx, {n(2), n(4), m}), InvalidArgument);
  EXPECT_THROW(localize(ctx, {Elem::zero(), n(1)}), InvalidArgument);
  EXPECT_THROW(localize(ctx, {n(1), n(7)}), ContextMismatch);
  EXPECT_TRUE(is_multiplicative_set(ctx, {n(1), m}));
  EXPECT_FALSE(is_multiplicative_set(ctx, {n(1), n(3)}));
}

TEST(Localization, DuplicateElementsAreIgnored) {
  const SemiringCtx ctx(3);
  EXPECT_EQ(localize(ctx, {m, n(1), m}).multiplicative_set(), (std::vector<Elem>{n(1), m}));
}

TEST(Localization, FiniteNonunitDetection) {
  EXPECT_TRUE(has_finite_nonunit({n(1), n(2), m}));
  EXPECT_FALSE(has_finite_nonunit({n(1), m}));
}

TEST(FiniteSemiring, BooleanTables) {
  const auto b = boolean_semiring();
  EXPECT_TRUE(satisfies_semiring_axioms(b));
  EXPECT_TRUE(is_additively_idempotent(b));
  EXPECT_EQ(b.sum(1, 1), 1u);
  EXPECT_FALSE(find_isomorphism(b, tables_of(SemiringCtx(1))).has_value());
}

TEST(FiniteSemiring, IsomorphismOfEqualSemiringsIsIdentity) {
  const auto t = tables_of(SemiringCtx(5));
  const auto iso = find_isomorphism(t, t);
  ASSERT_TRUE(iso.has_value());
  for (std::size_t i = 0; i < iso->size(); ++i) EXPECT_EQ((*iso)[i], i);
}

}  // namespace
}  // namespace indigenous
