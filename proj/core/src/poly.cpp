#include "indigenous/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "indigenous/errors.hpp"

namespace indigenous {

std::string to_string(Degree d) { return d.is_neg_infinity() ? "-inf" : std::to_string(d.value()); }

Poly::Poly(const SemiringCtx& ctx, std::vector<Elem> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
  for (const Elem c : coeffs_) ctx_.check(c);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const SemiringCtx& ctx, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, Elem::zero());
  coeffs[degree] = c;
  return Poly(ctx, std::move(coeffs));
}

namespace {

void require_same(const Poly& f, const Poly& g) {
  if (!(f.ctx() == g.ctx())) {
    throw ContextMismatch("polynomials over S_" + std::to_string(f.ctx().k()) + " and S_" +
                          std::to_string(g.ctx().k()));
  }
}

}  // namespace

Poly operator+(const Poly& f, const Poly& g) {
  require_same(f, g);
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.ctx().add(f.coeff(i), g.coeff(i));
  return Poly(f.ctx(), std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) return Poly::zero(f.ctx());
  const auto& ctx = f.ctx();
  std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, Elem::zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(f.coeffs()[i], g.coeffs()[j]));
    }
  }
  return Poly(ctx, std::move(out));
}

Degree degree(const Poly& f) {
  return f.is_zero() ? Degree::neg_infinity() : Degree::of(f.coeffs().size() - 1);
}

bool is_unit(const Poly& f) { return f.coeffs().size() == 1 && f.coeffs()[0].is_one(); }

bool is_idempotent(const Poly& f) { return f * f == f; }

bool is_idempotent_constant(const Poly& f) {
  if (f.is_zero()) return true;
  if (f.coeffs().size() != 1) return false;
  const Elem c = f.coeffs()[0];
  return c.is_one() || c.is_many();
}

std::vector<Poly> all_polys(const SemiringCtx& ctx, std::size_t max_degree) {
  const auto elems = ctx.elements();
  const std::size_t base = elems.size();
  std::vector<Poly> out{Poly::zero(ctx)};
  for (std::size_t d = 0; d <= max_degree; ++d) {
    // Leading coefficient nonzero, lower ones free.
    std::size_t lower = 1;
    for (std::size_t i = 0; i < d; ++i) lower *= base;
    for (std::size_t lead = 1; lead < base; ++lead) {
      for (std::size_t code = 0; code < lower; ++code) {
        std::vector<Elem> coeffs(d + 1);
        std::size_t rest = code;
        for (std::size_t i = 0; i < d; ++i) {
          coeffs[i] = elems[rest % base];
          rest /= base;
        }
        coeffs[d] = elems[lead];
        out.emplace_back(ctx, std::move(coeffs));
      }
    }
  }
  return out;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Elem c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (i == 1) out += " X";
    if (i > 1) out += " X^" + std::to_string(i);
  }
  return out;
}

namespace detail {

constexpr std::size_t kMaxParsedExponent = 1u << 16;

std::vector<Elem> parse_terms(const SemiringCtx& ctx, std::string_view text) {
  std::string compact;
  for (const char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw ParseError("empty polynomial");

  std::vector<Elem> coeffs;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const auto next = compact.find('+', pos);
    const std::string term =
        compact.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

    const auto x = term.find_first_of("Xx");
    std::string coeff_text = term.substr(0, x);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
    const Elem coeff = coeff_text.empty() ? Elem::one() : parse_elem(coeff_text);
    ctx.check(coeff);

    std::size_t exponent = 0;
    if (x != std::string::npos) {
      const std::string tail = term.substr(x + 1);
      exponent = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() == 1) {
          throw ParseError("malformed term '" + term + "'");
        }
        const char* first = tail.data() + 1;
        const char* last = tail.data() + tail.size();
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc{} || ptr != last) throw ParseError("bad exponent in '" + term + "'");
        if (exponent > kMaxParsedExponent) throw ParseError("exponent too large in '" + term + "'");
      }
    }
    if (exponent >= coeffs.size()) coeffs.resize(exponent + 1, Elem::zero());
    coeffs[exponent] = ctx.add(coeffs[exponent], coeff);

    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return coeffs;
}

}  // namespace detail

Poly parse_poly(const SemiringCtx& ctx, std::string_view text) {
  return Poly(ctx, detail::parse_terms(ctx, text));
}

}  // namespace indigenous
