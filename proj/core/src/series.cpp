#include "indigenous/series.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "indigenous/errors.hpp"

namespace indigenous {

TruncSeries::TruncSeries(const SemiringCtx& ctx, std::size_t depth, std::vector<Elem> coeffs)
    : ctx_(ctx), depth_(depth), coeffs_(std::move(coeffs)) {
  if (depth == 0) throw InvalidArgument("series depth must be positive");
  if (coeffs_.size() > depth + 1) {
    throw InvalidArgument(std::to_string(coeffs_.size()) + " coefficients do not fit depth " +
                          std::to_string(depth));
  }
  for (const Elem c : coeffs_) ctx_.check(c);
  coeffs_.resize(depth + 1, Elem::zero());
}

TruncSeries TruncSeries::from_poly(const Poly& f, std::size_t depth) {
  std::vector<Elem> coeffs = f.coeffs();
  if (coeffs.size() > depth + 1) coeffs.resize(depth + 1);
  return TruncSeries(f.ctx(), depth, std::move(coeffs));
}

bool TruncSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c.is_zero(); });
}

std::vector<std::size_t> TruncSeries::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= depth_; ++i) {
    if (!coeffs_[i].is_zero()) out.push_back(i);
  }
  return out;
}

namespace {

void require_same(const TruncSeries& f, const TruncSeries& g) {
  if (!(f.ctx() == g.ctx()) || f.depth() != g.depth()) {
    throw ContextMismatch("series windows differ: S_" + std::to_string(f.ctx().k()) + " depth " +
                          std::to_string(f.depth()) + " vs S_" + std::to_string(g.ctx().k()) +
                          " depth " + std::to_string(g.depth()));
  }
}

}  // namespace

TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
  require_same(f, g);
  std::vector<Elem> out(f.depth() + 1);
  for (std::size_t i = 0; i <= f.depth(); ++i) out[i] = f.ctx().add(f.coeff(i), g.coeff(i));
  return TruncSeries(f.ctx(), f.depth(), std::move(out));
}

TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
  require_same(f, g);
  const auto& ctx = f.ctx();
  const std::size_t n = f.depth();
  std::vector<Elem> out(n + 1, Elem::zero());
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(f.coeff(i), g.coeff(j)));
    }
  }
  return TruncSeries(ctx, n, std::move(out));
}

bool is_unit(const TruncSeries& f) {
  if (!f.coeff(0).is_one()) return false;
  return f.support().empty();
}

std::optional<TruncSeries> inverse_by_search(const TruncSeries& f) {
  const auto& ctx = f.ctx();
  const std::size_t n = f.depth();
  const auto elems = ctx.elements();
  std::vector<Elem> g(n + 1, Elem::zero());

  // Coefficient i of f * g only involves g_0, ..., g_i.
  const auto product_coeff = [&](std::size_t i) {
    Elem acc = Elem::zero();
    for (std::size_t j = 0; j <= i; ++j) acc = ctx.add(acc, ctx.mul(f.coeff(j), g[i - j]));
    return acc;
  };
  const auto search = [&](const auto& self, std::size_t i) -> bool {
    if (i > n) return true;
    const Elem target = i == 0 ? Elem::one() : Elem::zero();
    for (const Elem c : elems) {
      g[i] = c;
      if (product_coeff(i) == target && self(self, i + 1)) return true;
    }
    g[i] = Elem::zero();
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return TruncSeries(ctx, n, g);
}

bool idempotent_by_squaring(const TruncSeries& f) { return f * f == f; }

bool idempotent_by_structure(const TruncSeries& f) {
  if (f.is_zero()) return true;
  const Elem a0 = f.coeff(0);
  if (!a0.is_one() && !a0.is_many()) return false;
  const auto support = f.support();
  for (const auto s : support) {
    if (!f.coeff(s).is_many()) return false;
  }
  for (const auto s : support) {
    for (const auto t : support) {
      if (s + t <= f.depth() && f.coeff(s + t).is_zero()) return false;
    }
  }
  return true;
}

bool is_idempotent_window(const TruncSeries& f) {
  const bool squared = idempotent_by_squaring(f);
  if (squared != idempotent_by_structure(f)) {
    throw std::logic_error("idempotency checks disagree on " + to_string(f));
  }
  return squared;
}

std::vector<std::size_t> numerical_semigroup(const std::vector<std::size_t>& gens, std::size_t limit) {
  if (gens.empty()) throw InvalidArgument("a numerical semigroup needs at least one generator");
  if (std::find(gens.begin(), gens.end(), std::size_t{0}) != gens.end()) {
    throw InvalidArgument("generators must be positive");
  }
  std::vector<char> member(limit + 1, 0);
  // Closure iteration: add generators, then sums of members, until stable.
  for (const auto g : gens) {
    if (g <= limit) member[g] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 1; s <= limit; ++s) {
      if (!member[s]) continue;
      for (std::size_t t = s; s + t <= limit; ++t) {
        if (member[t] && !member[s + t]) member[s + t] = 1, changed = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s <= limit; ++s) {
    if (member[s]) out.push_back(s);
  }
  return out;
}

TruncSeries idempotent_series_from_generators(const SemiringCtx& ctx, Elem a0,
                                              const std::vector<std::size_t>& gens,
                                              std::size_t depth) {
  if (!a0.is_one() && !a0.is_many()) {
    throw InvalidArgument("the constant term of an idempotent series must be 1 or m, got " +
                          to_string(a0));
  }
  std::vector<Elem> coeffs(depth + 1, Elem::zero());
  coeffs[0] = a0;
  for (const auto s : numerical_semigroup(gens, depth)) coeffs[s] = Elem::many();
  return TruncSeries(ctx, depth, std::move(coeffs));
}

std::vector<TruncSeries> all_windows(const SemiringCtx& ctx, std::size_t depth) {
  const auto elems = ctx.elements();
  const std::size_t base = elems.size();
  std::vector<std::size_t> digits(depth + 1, 0);
  std::vector<TruncSeries> out;
  while (true) {
    std::vector<Elem> coeffs(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i) coeffs[i] = elems[digits[i]];
    out.emplace_back(ctx, depth, std::move(coeffs));
    std::size_t i = depth + 1;
    while (i > 0 && ++digits[i - 1] == base) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::string to_string(const TruncSeries& f) {
  return to_string(Poly(f.ctx(), f.coeffs())) + " + O(X^" + std::to_string(f.depth() + 1) + ")";
}

TruncSeries parse_series(const SemiringCtx& ctx, std::string_view text, std::size_t depth) {
  std::string body(text);
  const auto marker = body.find("O(");
  if (marker != std::string::npos) {
    const auto close = body.find(')', marker);
    if (close == std::string::npos) throw ParseError("unterminated O(...) marker");
    const std::string inner = body.substr(marker + 2, close - marker - 2);
    const auto caret = inner.find('^');
    std::size_t order = 1;
    if (caret != std::string::npos) {
      const char* first = inner.data() + caret + 1;
      const char* last = inner.data() + inner.size();
      auto [ptr, ec] = std::from_chars(first, last, order);
      if (ec != std::errc{} || ptr != last) throw ParseError("bad O(...) marker '" + inner + "'");
    }
    if (order < 2) throw ParseError("O(X^n) marker needs n >= 2");
    depth = order - 1;
    body.erase(marker, close - marker + 1);
    // Drop the '+' that joined the marker.
    const auto last = body.find_last_not_of(" \t");
    if (last != std::string::npos && body[last] == '+') body.erase(last);
    const auto first = body.find_first_not_of(" \t");
    if (first != std::string::npos && body[first] == '+') body.erase(0, first + 1);
  }
  if (depth == 0) throw ParseError("series depth missing");
  const bool blank = body.find_first_not_of(" \t") == std::string::npos;
  auto coeffs = blank && marker != std::string::npos ? std::vector<Elem>{}
                                                     : detail::parse_terms(ctx, body);
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() > depth + 1) throw ParseError("series has terms beyond its depth");
  return TruncSeries(ctx, depth, std::move(coeffs));
}

}  // namespace indigenous
