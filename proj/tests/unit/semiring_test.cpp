#include <gtest/gtest.h>

#include "indigenous/elem.hpp"
#include "indigenous/errors.hpp"
#include "indigenous/semiring.hpp"
#include "oracle.hpp"

namespace indigenous {
namespace {

const Elem m = Elem::many();
Elem n(std::uint32_t v) { return Elem::fin(v); }

TEST(Semiring, ElementsAreOrderedZeroFiniteMany) {
  const SemiringCtx ctx(3);
  const std::vector<Elem> expected{Elem::zero(), n(1), n(2), n(3), m};
  EXPECT_EQ(ctx.elements(), expected);
  EXPECT_EQ(ctx.size(), 5u);
  EXPECT_EQ(ctx.index(m), 4u);
  EXPECT_EQ(ctx.at(2), n(2));
}

TEST(Semiring, ExampleSums) {
  EXPECT_EQ(SemiringCtx(3).add(n(2), n(2)), m);
  EXPECT_EQ(SemiringCtx(5).add(n(2), n(3)), n(5));
  EXPECT_EQ(SemiringCtx(2).add(m, n(1)), m);
  EXPECT_EQ(SemiringCtx(1).add(n(1), n(1)), m);
}

TEST(Semiring, ExampleProducts) {
  EXPECT_EQ(SemiringCtx(4).mul(n(2), n(2)), n(4));
  EXPECT_EQ(SemiringCtx(3).mul(n(2), n(2)), m);
  EXPECT_EQ(SemiringCtx(7).mul(Elem::zero(), m), Elem::zero());
  EXPECT_EQ(SemiringCtx(5).mul(n(1), n(5)), n(5));
}

TEST(Semiring, MatchesIntegerModel) {
  for (std::uint32_t k = 1; k <= 20; ++k) {
    const SemiringCtx ctx(k);
    for (const Elem a : ctx.elements()) {
      for (const Elem b : ctx.elements()) {
        const int x = oracle::encode(k, a);
        const int y = oracle::encode(k, b);
        ASSERT_EQ(ctx.add(a, b), oracle::decode(k, oracle::add(k, x, y))) << "k=" << k;
        ASSERT_EQ(ctx.mul(a, b), oracle::decode(k, oracle::mul(k, x, y))) << "k=" << k;
        ASSERT_EQ(ctx.leq(a, b), x <= y);
      }
    }
  }
}

TEST(Semiring, UnitsAndIdempotents) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    for (const Elem a : ctx.elements()) {
      EXPECT_EQ(ctx.is_unit(a), a == n(1));
      EXPECT_EQ(ctx.is_idempotent(a), a == Elem::zero() || a == n(1) || a == m);
    }
  }
}

TEST(Semiring, CanonicalMap) {
  const SemiringCtx ctx(3);
  EXPECT_EQ(ctx.canonical_map(0), Elem::zero());
  EXPECT_EQ(ctx.canonical_map(3), n(3));
  EXPECT_EQ(ctx.canonical_map(4), m);
  EXPECT_EQ(ctx.canonical_map(1'000'000'000'000), m);
}

TEST(Semiring, Powers) {
  const SemiringCtx ctx(10);
  EXPECT_THROW(ctx.pow(n(2), 0), InvalidArgument);
  EXPECT_EQ(ctx.pow(n(2), 1), n(2));
  EXPECT_EQ(ctx.pow(n(2), 3), n(8));
  EXPECT_EQ(ctx.pow(n(2), 4), m);
  EXPECT_EQ(ctx.pow(n(1), 1'000'000'000), n(1));
  EXPECT_EQ(ctx.pow(Elem::zero(), 5), Elem::zero());
}

TEST(Semiring, RejectsForeignElements) {
  const SemiringCtx ctx(3);
  EXPECT_THROW(ctx.add(n(4), n(1)), ContextMismatch);
  EXPECT_THROW(ctx.mul(n(1), n(9)), ContextMismatch);
  EXPECT_THROW(SemiringCtx(0), InvalidArgument);
  EXPECT_THROW(Elem::fin(0), InvalidArgument);
}

TEST(Elem, ParseAndPrint) {
  EXPECT_EQ(parse_elem("m"), m);
  EXPECT_EQ(parse_elem("M"), m);
  EXPECT_EQ(parse_elem("0"), Elem::zero());
  EXPECT_EQ(parse_elem("17"), n(17));
  EXPECT_EQ(to_string(m), "m");
  EXPECT_EQ(to_string(n(12)), "12");
  const std::vector<Elem> list{n(1), n(2), m};
  EXPECT_EQ(parse_elem_list("1, 2,m"), list);
  EXPECT_EQ(join(list), "1,2,m");
  EXPECT_THROW(parse_elem("x"), ParseError);
  EXPECT_THROW(parse_elem("-1"), ParseError);
  EXPECT_THROW(parse_elem(""), ParseError);
}

TEST(Elem, TotalOrder) {
  EXPECT_LT(Elem::zero(), n(1));
  EXPECT_LT(n(1), n(1000));
  EXPECT_LT(n(1000), m);
}

}  // namespace
}  // namespace indigenous
