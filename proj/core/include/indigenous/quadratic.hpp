#pragma once

#include <cstdint>
#include <optional>

#include "indigenous/elem.hpp"
#include "indigenous/poly.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// Closed-form irreducibility of alpha X^2 + beta over S_k: irreducible iff
/// alpha and beta are finite and coprime, or {alpha, beta} = {m, 1} with m on
/// X^2 or on the constant. Throws InvalidArgument when alpha is 0.
bool quadratic_irreducible(const SemiringCtx& ctx, Elem alpha, Elem beta);

/// Smallest nonzero nonunit constant gamma with alpha X^2 + beta = gamma * g,
/// if any. Throws InvalidArgument when alpha is 0.
std::optional<Elem> quadratic_constant_factor(const SemiringCtx& ctx, Elem alpha, Elem beta);

struct Factorization {
  Poly left;
  Poly right;
};

inline constexpr std::uint32_t kDefaultOracleBound = 6;

/// Exhaustive search for f = g * h with g and h nonunits and
/// deg g + deg h = deg f, coefficients over all of S_k. Factor pairs are
/// tried by increasing deg g. Requires 0 <= deg f <= 2; throws
/// InvalidArgument otherwise and BoundExceeded if k > bound.
std::optional<Factorization> factorization_oracle(const Poly& f,
                                                  std::uint32_t bound = kDefaultOracleBound);

}  // namespace indigenous
