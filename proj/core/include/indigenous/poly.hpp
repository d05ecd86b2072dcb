#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indigenous/elem.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// Degree of a polynomial: a natural number, or -infinity for 0.
class Degree {
 public:
  static constexpr Degree neg_infinity() noexcept { return Degree{}; }
  static constexpr Degree of(std::size_t n) noexcept { return Degree{n}; }

  constexpr bool is_neg_infinity() const noexcept { return !value_.has_value(); }
  constexpr std::size_t value() const noexcept { return *value_; }

  /// max, with -infinity neutral.
  friend constexpr Degree max(Degree a, Degree b) noexcept {
    if (a.is_neg_infinity()) return b;
    if (b.is_neg_infinity()) return a;
    return Degree{a.value() > b.value() ? a.value() : b.value()};
  }
  /// Sum, with -infinity absorbing.
  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
    return Degree{a.value() + b.value()};
  }
  friend constexpr bool operator==(const Degree&, const Degree&) = default;

 private:
  constexpr Degree() noexcept = default;
  constexpr explicit Degree(std::size_t n) noexcept : value_(n) {}

  std::optional<std::size_t> value_;
};

std::string to_string(Degree d);

/// A polynomial in S_k[X], coefficients from degree 0 up, trailing zeros
/// trimmed (the zero polynomial has no coefficients).
class Poly {
 public:
  /// Throws ContextMismatch if a coefficient is not in S_k.
  Poly(const SemiringCtx& ctx, std::vector<Elem> coeffs);

  static Poly zero(const SemiringCtx& ctx) { return Poly(ctx, {}); }
  static Poly constant(const SemiringCtx& ctx, Elem c) { return Poly(ctx, {c}); }
  static Poly monomial(const SemiringCtx& ctx, Elem c, std::size_t degree);

  const SemiringCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the last stored coefficient.
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem::zero(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  SemiringCtx ctx_;
  std::vector<Elem> coeffs_;
};

/// Both throw ContextMismatch when the polynomials live over different S_k.
Poly operator+(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);

Degree degree(const Poly& f);
bool is_unit(const Poly& f);
/// f * f == f, computed directly.
bool is_idempotent(const Poly& f);
/// Closed form: f is one of the constants 0, 1, m.
bool is_idempotent_constant(const Poly& f);

/// Every polynomial of degree <= max_degree (including 0), ordered by degree
/// and then coefficients.
std::vector<Poly> all_polys(const SemiringCtx& ctx, std::size_t max_degree);

/// "c0 + c1 X + c2 X^2 ..." with zero terms omitted; "0" for the zero
/// polynomial.
std::string to_string(const Poly& f);

/// Accepts the to_string form and looser input: terms in any order, "mX",
/// "2*X^3", bare "X". Repeated exponents are added. Throws ParseError.
Poly parse_poly(const SemiringCtx& ctx, std::string_view text);

namespace detail {
/// Parses "c0 + c1 X ..." into a dense coefficient vector (not trimmed).
std::vector<Elem> parse_terms(const SemiringCtx& ctx, std::string_view text);
}  // namespace detail

}  // namespace indigenous
