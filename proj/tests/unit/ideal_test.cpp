#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "indigenous/errors.hpp"
#include "indigenous/ideal.hpp"
#include "oracle.hpp"

namespace indigenous {
namespace {

std::set<int> encode(const Ideal& ideal) {
  std::set<int> out;
  for (const Elem e : ideal.members()) out.insert(oracle::encode(ideal.ctx().k(), e));
  return out;
}

TEST(Ideals, MatchRawSubsetScan) {
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const auto expected = oracle::ideals(k);
    std::set<std::set<int>> got;
    for (const auto& i : enumerate_ideals(SemiringCtx(k))) got.insert(encode(i));
    EXPECT_EQ(got, std::set<std::set<int>>(expected.begin(), expected.end())) << "k=" << k;
  }
}

TEST(Ideals, FrozenCounts) {
  // Counts from an exhaustive subset scan in a separate implementation.
  const std::vector<std::size_t> expected{3, 4, 6, 8, 13, 17, 28, 38, 59, 81, 132, 172};
  for (std::uint32_t k = 1; k <= expected.size(); ++k) {
    EXPECT_EQ(enumerate_ideals(SemiringCtx(k)).size(), expected[k - 1]) << "k=" << k;
  }
}

TEST(Ideals, FrozenListForKEqualsThree) {
  const SemiringCtx ctx(3);
  std::set<std::set<int>> got;
  for (const auto& i : enumerate_ideals(ctx)) got.insert(encode(i));
  const std::set<std::set<int>> expected{{0}, {0, 4}, {0, 3, 4}, {0, 2, 4}, {0, 2, 3, 4}, {0, 1, 2, 3, 4}};
  EXPECT_EQ(got, expected);
}

TEST(Ideals, EveryNonzeroIdealContainsMany) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    for (const auto& i : enumerate_ideals(ctx)) {
      if (i.is_zero()) continue;
      EXPECT_TRUE(i.contains(Elem::many()));
      EXPECT_TRUE(smallest_nonzero_ideal(ctx).is_subset_of(i));
      if (i.is_proper()) EXPECT_TRUE(i.is_subset_of(maximal_ideal(ctx)));
    }
  }
}

TEST(Ideals, ExactlyTwoPrimes) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    std::vector<Ideal> primes;
    for (const auto& i : enumerate_ideals(ctx)) {
      if (is_prime(ctx, i)) primes.push_back(i);
    }
    ASSERT_EQ(primes.size(), 2u) << "k=" << k;
    EXPECT_EQ(primes[0], zero_ideal(ctx));
    EXPECT_EQ(primes[1], maximal_ideal(ctx));
    EXPECT_TRUE(is_maximal(ctx, maximal_ideal(ctx)));
  }
}

TEST(Ideals, OnlyTrivialIdealsAreSubtractive) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    for (const auto& i : enumerate_ideals(ctx)) {
      EXPECT_EQ(is_subtractive(ctx, i), i.is_zero() || i.is_whole()) << "k=" << k;
    }
  }
}

TEST(Ideals, RadicalOfNonzeroProperIdeal) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    for (const auto& i : enumerate_ideals(ctx)) {
      if (i.is_zero() || i.is_whole()) {
        EXPECT_EQ(radical(ctx, i), i);
      } else {
        EXPECT_EQ(radical(ctx, i), maximal_ideal(ctx)) << "k=" << k;
      }
    }
  }
}

TEST(Ideals, NonzeroPrincipalPrimeExactlyForSmallK) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    bool found = false;
    for (const auto& [gen, ideal] : principal_ideals(ctx)) {
      found = found || (!ideal.is_zero() && is_prime(ctx, ideal));
    }
    EXPECT_EQ(found, k <= 2) << "k=" << k;
  }
}

TEST(Ideals, PrincipalIdealOfManyAtKEqualsOne) {
  const SemiringCtx ctx(1);
  const auto ideal = ideal_generated(ctx, {Elem::many()});
  EXPECT_EQ(ideal, smallest_nonzero_ideal(ctx));
  EXPECT_EQ(ideal, maximal_ideal(ctx));
  EXPECT_TRUE(is_prime(ctx, ideal));
}

TEST(Ideals, Generation) {
  const SemiringCtx ctx(5);
  const auto two = ideal_generated(ctx, {Elem::fin(2)});
  const std::vector<Elem> expected{Elem::zero(), Elem::fin(2), Elem::fin(4), Elem::many()};
  EXPECT_EQ(two.members(), expected);
  EXPECT_EQ(ideal_generated(ctx, {}), zero_ideal(ctx));
  EXPECT_EQ(ideal_generated(ctx, {Elem::fin(1)}), whole_ideal(ctx));
}

TEST(Ideals, SumAndProduct) {
  const SemiringCtx ctx(5);
  const auto two = ideal_generated(ctx, {Elem::fin(2)});
  const auto three = ideal_generated(ctx, {Elem::fin(3)});
  EXPECT_EQ(ideal_sum(two, three), ideal_generated(ctx, {Elem::fin(2), Elem::fin(3)}));
  EXPECT_EQ(ideal_product(two, three), smallest_nonzero_ideal(ctx));
  EXPECT_EQ(ideal_product(two, whole_ideal(ctx)), two);
}

TEST(Ideals, FromMembersValidates) {
  const SemiringCtx ctx(3);
  EXPECT_THROW(Ideal::from_members(ctx, {Elem::zero(), Elem::fin(2)}), InvalidArgument);
  EXPECT_NO_THROW(Ideal::from_members(ctx, {Elem::many(), Elem::zero()}));
  EXPECT_FALSE(is_ideal(ctx, {Elem::fin(1)}));
}

TEST(Ideals, BoundIsEnforced) {
  EXPECT_THROW(enumerate_ideals(SemiringCtx(17)), BoundExceeded);
}

}  // namespace
}  // namespace indigenous
