#include "indigenous/quadratic.hpp"

#include <numeric>

#include "indigenous/errors.hpp"

namespace indigenous {

namespace {

void require_alpha(const SemiringCtx& ctx, Elem alpha, Elem beta) {
  ctx.check(alpha);
  ctx.check(beta);
  if (alpha.is_zero()) throw InvalidArgument("alpha X^2 + beta needs a nonzero alpha");
}

// gamma * x == target for some x in S_k.
bool divides(const SemiringCtx& ctx, Elem gamma, Elem target) {
  for (const Elem x : ctx.elements()) {
    if (ctx.mul(gamma, x) == target) return true;
  }
  return false;
}

}  // namespace

bool quadratic_irreducible(const SemiringCtx& ctx, Elem alpha, Elem beta) {
  require_alpha(ctx, alpha, beta);
  if (alpha.is_fin() && beta.is_fin()) return std::gcd(alpha.value(), beta.value()) == 1;
  if (alpha.is_many() && beta.is_one()) return true;
  if (alpha.is_one() && beta.is_many()) return true;
  return false;
}

std::optional<Elem> quadratic_constant_factor(const SemiringCtx& ctx, Elem alpha, Elem beta) {
  require_alpha(ctx, alpha, beta);
  for (const Elem gamma : ctx.nonzero_elements()) {
    if (gamma.is_one()) continue;
    if (divides(ctx, gamma, alpha) && divides(ctx, gamma, beta)) return gamma;
  }
  return std::nullopt;
}

std::optional<Factorization> factorization_oracle(const Poly& f, std::uint32_t bound) {
  const auto& ctx = f.ctx();
  if (ctx.k() > bound) throw BoundExceeded("factorization_oracle", ctx.k(), bound);
  const Degree d = degree(f);
  if (d.is_neg_infinity() || d.value() > 2) {
    throw InvalidArgument("factorization_oracle handles nonzero polynomials of degree <= 2, got " +
                          to_string(f));
  }
  const std::size_t n = d.value();
  const auto candidates = all_polys(ctx, n);
  for (std::size_t dg = 0; dg <= n; ++dg) {
    for (const auto& g : candidates) {
      if (g.is_zero() || degree(g).value() != dg || is_unit(g)) continue;
      for (const auto& h : candidates) {
        if (h.is_zero() || degree(h).value() != n - dg || is_unit(h)) continue;
        if (g * h == f) return Factorization{g, h};
      }
    }
  }
  return std::nullopt;
}

}  // namespace indigenous
