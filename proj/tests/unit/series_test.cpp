#include <gtest/gtest.h>

#include "indigenous/errors.hpp"
#include "indigenous/series.hpp"

namespace indigenous {
namespace {

const Elem m = Elem::many();
Elem n(std::uint32_t v) { return Elem::fin(v); }

TEST(NumericalSemigroup, FrozenValues) {
  EXPECT_EQ(numerical_semigroup({3, 5}, 10), (std::vector<std::size_t>{3, 5, 6, 8, 9, 10}));
  EXPECT_EQ(numerical_semigroup({2}, 6), (std::vector<std::size_t>{2, 4, 6}));
  EXPECT_EQ(numerical_semigroup({4, 6, 9}, 20),
            (std::vector<std::size_t>{4, 6, 8, 9, 10, 12, 13, 14, 15, 16, 17, 18, 19, 20}));
  EXPECT_THROW(numerical_semigroup({}, 5), InvalidArgument);
  EXPECT_THROW(numerical_semigroup({0, 2}, 5), InvalidArgument);
}

TEST(Series, IdempotentFromGenerators) {
  const SemiringCtx ctx(3);
  const auto f = idempotent_series_from_generators(ctx, n(1), {3, 5}, 8);
  EXPECT_EQ(to_string(f), "1 + m X^3 + m X^5 + m X^6 + m X^8 + O(X^9)");
  EXPECT_EQ(f.support(), (std::vector<std::size_t>{3, 5, 6, 8}));
  EXPECT_TRUE(is_idempotent_window(f));
  EXPECT_EQ(f * f, f);
  const auto g = idempotent_series_from_generators(ctx, m, {2}, 5);
  EXPECT_TRUE(is_idempotent_window(g));
  EXPECT_THROW(idempotent_series_from_generators(ctx, n(2), {2}, 5), InvalidArgument);
}

TEST(Series, StructureAgreesWithSquaring) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const SemiringCtx ctx(k);
    for (std::size_t depth = 1; depth <= (k <= 2 ? 6u : 4u); ++depth) {
      for (const auto& f : all_windows(ctx, depth)) {
        ASSERT_EQ(idempotent_by_squaring(f), idempotent_by_structure(f)) << to_string(f);
      }
    }
  }
}

TEST(Series, WindowUnitsAreOne) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const SemiringCtx ctx(k);
    const auto windows = all_windows(ctx, 2);
    const TruncSeries one(ctx, 2, {n(1)});
    for (const auto& f : windows) {
      bool has_inverse = false;
      for (const auto& g : windows) has_inverse = has_inverse || f * g == one;
      EXPECT_EQ(has_inverse, f == one) << to_string(f);
      EXPECT_EQ(is_unit(f), f == one);
    }
  }
}

TEST(Series, InverseSearchMatchesPairwiseSearch) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const SemiringCtx ctx(k);
    const auto windows = all_windows(ctx, 2);
    const TruncSeries one(ctx, 2, {n(1)});
    for (const auto& f : windows) {
      std::optional<TruncSeries> pairwise;
      for (const auto& g : windows) {
        if (f * g == one) pairwise = g;
      }
      EXPECT_EQ(inverse_by_search(f), pairwise) << to_string(f);
    }
  }
}

TEST(Series, Parse) {
  const SemiringCtx ctx(3);
  const auto f = parse_series(ctx, "1 + m X^2 + O(X^4)");
  EXPECT_EQ(f.depth(), 3u);
  EXPECT_EQ(f.coeff(2), m);
  EXPECT_EQ(f.coeff(3), Elem::zero());
  EXPECT_EQ(parse_series(ctx, "1 + X", 3).depth(), 3u);
  EXPECT_TRUE(parse_series(ctx, "O(X^3)").is_zero());
  EXPECT_THROW(parse_series(ctx, "1 + X"), ParseError);
  EXPECT_THROW(parse_series(ctx, "X^5 + O(X^3)"), ParseError);
  EXPECT_THROW(parse_series(ctx, "1 + O(X^"), ParseError);
  EXPECT_EQ(parse_series(ctx, to_string(f)), f);
}

TEST(Series, WindowsMustMatch) {
  const SemiringCtx ctx(3);
  EXPECT_THROW(TruncSeries(ctx, 2, {}) + TruncSeries(ctx, 3, {}), ContextMismatch);
  EXPECT_THROW(TruncSeries(ctx, 0, {}), InvalidArgument);
  EXPECT_THROW(TruncSeries(ctx, 1, {n(1), n(1), n(1)}), InvalidArgument);
}

TEST(Series, ProductTruncates) {
  const SemiringCtx ctx(5);
  const TruncSeries f(ctx, 2, {n(1), n(1)});
  EXPECT_EQ(f * f, TruncSeries(ctx, 2, {n(1), n(2), n(1)}));
  EXPECT_EQ((f * f * f).coeffs(), (std::vector<Elem>{n(1), n(3), n(3)}));
}

}  // namespace
}  // namespace indigenous
