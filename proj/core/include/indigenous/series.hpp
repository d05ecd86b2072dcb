#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indigenous/elem.hpp"
#include "indigenous/poly.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// A power series over S_k seen through the window of degrees 0..depth.
/// Always holds exactly depth + 1 coefficients; nothing is trimmed.
///
/// Window semantics: every product is truncated at depth, so a window that
/// squares to itself is only known to be idempotent up to X^depth. The
/// generator-based constructor is the only way to obtain a window of a
/// genuinely idempotent series.
class TruncSeries {
 public:
  /// coeffs may be shorter than depth + 1 (padded with zeros); longer input
  /// throws InvalidArgument. depth must be positive.
  TruncSeries(const SemiringCtx& ctx, std::size_t depth, std::vector<Elem> coeffs);

  static TruncSeries zero(const SemiringCtx& ctx, std::size_t depth) { return {ctx, depth, {}}; }
  static TruncSeries from_poly(const Poly& f, std::size_t depth);

  const SemiringCtx& ctx() const noexcept { return ctx_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const noexcept;

  /// Indices i in [1, depth] with a nonzero coefficient.
  std::vector<std::size_t> support() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  SemiringCtx ctx_;
  std::size_t depth_;
  std::vector<Elem> coeffs_;
};

/// Both throw ContextMismatch on different S_k or different depths.
TruncSeries operator+(const TruncSeries& f, const TruncSeries& g);
TruncSeries operator*(const TruncSeries& f, const TruncSeries& g);

/// The constant-1 window.
bool is_unit(const TruncSeries& f);

/// Searches every window g with f * g == 1, fixing g's coefficients in
/// degree order and abandoning a prefix as soon as the product's coefficient
/// at that degree differs from 1's.
std::optional<TruncSeries> inverse_by_search(const TruncSeries& f);

/// f * f == f within the window.
bool idempotent_by_squaring(const TruncSeries& f);
/// f is 0, or a0 in {1, m} with every higher nonzero coefficient equal to m
/// and the support closed under addition inside [1, depth].
bool idempotent_by_structure(const TruncSeries& f);
/// Both checks; throws std::logic_error if they disagree.
bool is_idempotent_window(const TruncSeries& f);

/// The numerical semigroup generated by gens, intersected with [1, limit].
/// Throws InvalidArgument for an empty set or a zero generator.
std::vector<std::size_t> numerical_semigroup(const std::vector<std::size_t>& gens, std::size_t limit);

/// a0 + sum of m X^s over the semigroup generated by gens, up to depth.
/// Throws InvalidArgument unless a0 is 1 or m.
TruncSeries idempotent_series_from_generators(const SemiringCtx& ctx, Elem a0,
                                              const std::vector<std::size_t>& gens,
                                              std::size_t depth);

/// Every window of the given depth, in lexicographic coefficient order.
std::vector<TruncSeries> all_windows(const SemiringCtx& ctx, std::size_t depth);

/// Polynomial text followed by " + O(X^{depth+1})".
std::string to_string(const TruncSeries& f);

/// Accepts to_string output. The O(X^n) marker sets depth n - 1; without it
/// the depth argument is used. Throws ParseError.
TruncSeries parse_series(const SemiringCtx& ctx, std::string_view text, std::size_t depth = 0);

}  // namespace indigenous
