#pragma once

#include <cstddef>
#include <vector>

#include "indigenous/elem.hpp"
#include "indigenous/finite_semiring.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

struct Fraction {
  Elem numerator;
  Elem denominator;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// U^{-1} S_k: classes of fractions a/u under a/u ~ b/v iff t*a*v = t*b*u for
/// some t in U. Classes are numbered in order of their first fraction (a
/// ascending, then u ascending), so 0/1 is class 0.
class LocalizedSemiring {
 public:
  const SemiringCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Elem>& multiplicative_set() const noexcept { return set_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Fraction>>& classes() const noexcept { return classes_; }
  const OperationTables& tables() const noexcept { return tables_; }
  std::size_t zero_class() const noexcept { return tables_.zero; }
  std::size_t one_class() const noexcept { return tables_.one; }

  /// Throws InvalidArgument when the denominator is not in U.
  std::size_t class_of(Fraction f) const;

  bool equivalent(Fraction a, Fraction b) const;

 private:
  friend LocalizedSemiring localize(const SemiringCtx& ctx, std::vector<Elem> set);

  explicit LocalizedSemiring(const SemiringCtx& ctx) : ctx_(ctx) {}

  SemiringCtx ctx_;
  std::vector<Elem> set_;
  std::vector<std::vector<Fraction>> classes_;
  std::vector<std::size_t> class_index_;  // by numerator index * |U| + position in U
  OperationTables tables_;
};

/// True when 1 is in set, 0 is not, and set is closed under multiplication.
bool is_multiplicative_set(const SemiringCtx& ctx, const std::vector<Elem>& set);

/// Builds the quotient and checks that the relation is an equivalence and
/// that both operations are independent of representatives (logic errors
/// otherwise). Throws InvalidArgument if set is not a valid multiplicative
/// set.
LocalizedSemiring localize(const SemiringCtx& ctx, std::vector<Elem> set);

/// Every multiplicatively closed U with 1 in U and 0 not in U, each sorted.
std::vector<std::vector<Elem>> multiplicative_sets(const SemiringCtx& ctx);

/// U contains some finite a > 1.
bool has_finite_nonunit(const std::vector<Elem>& set);

}  // namespace indigenous
