#include "indigenous/localization.hpp"

#include <algorithm>
#include <stdexcept>

#include "indigenous/errors.hpp"

namespace indigenous {

bool is_multiplicative_set(const SemiringCtx& ctx, const std::vector<Elem>& set) {
  const auto in = [&](Elem e) { return std::find(set.begin(), set.end(), e) != set.end(); };
  for (const Elem e : set) ctx.check(e);
  if (!in(Elem::one()) || in(Elem::zero())) return false;
  for (const Elem a : set) {
    for (const Elem b : set) {
      if (!in(ctx.mul(a, b))) return false;
    }
  }
  return true;
}

bool has_finite_nonunit(const std::vector<Elem>& set) {
  return std::any_of(set.begin(), set.end(), [](Elem e) { return e.is_fin() && e.value() > 1; });
}

bool LocalizedSemiring::equivalent(Fraction a, Fraction b) const {
  for (const Elem t : set_) {
    if (ctx_.mul(ctx_.mul(t, a.numerator), b.denominator) ==
        ctx_.mul(ctx_.mul(t, b.numerator), a.denominator)) {
      return true;
    }
  }
  return false;
}

std::size_t LocalizedSemiring::class_of(Fraction f) const {
  const auto it = std::find(set_.begin(), set_.end(), f.denominator);
  if (it == set_.end()) {
    throw InvalidArgument("denominator " + to_string(f.denominator) + " is not in U");
  }
  const auto pos = static_cast<std::size_t>(it - set_.begin());
  return class_index_.at(ctx_.index(f.numerator) * set_.size() + pos);
}

LocalizedSemiring localize(const SemiringCtx& ctx, std::vector<Elem> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!is_multiplicative_set(ctx, set)) {
    throw InvalidArgument("U = {" + join(set) +
                          "} must contain 1, exclude 0 and be closed under multiplication");
  }

  LocalizedSemiring out(ctx);
  out.set_ = set;
  const auto elems = ctx.elements();
  const std::size_t width = set.size();
  out.class_index_.assign(elems.size() * width, 0);

  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t u = 0; u < width; ++u) {
      const Fraction f{elems[a], set[u]};
      std::size_t c = 0;
      while (c < out.classes_.size() && !out.equivalent(out.classes_[c].front(), f)) ++c;
      if (c == out.classes_.size()) out.classes_.emplace_back();
      out.classes_[c].push_back(f);
      out.class_index_[a * width + u] = c;
    }
  }

  // Equivalence check: related exactly to the members of its own class.
  for (std::size_t c = 0; c < out.classes_.size(); ++c) {
    for (const Fraction f : out.classes_[c]) {
      for (std::size_t d = 0; d < out.classes_.size(); ++d) {
        for (const Fraction g : out.classes_[d]) {
          if (out.equivalent(f, g) != (c == d)) {
            throw std::logic_error("fraction relation is not an equivalence on S_" +
                                   std::to_string(ctx.k()));
          }
        }
      }
    }
  }

  const std::size_t n = out.classes_.size();
  auto& t = out.tables_;
  t.size = n;
  t.add.assign(n * n, 0);
  t.mul.assign(n * n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      bool first = true;
      for (const Fraction f : out.classes_[c]) {
        for (const Fraction g : out.classes_[d]) {
          const Elem den = ctx.mul(f.denominator, g.denominator);
          const auto s = out.class_of({ctx.add(ctx.mul(f.numerator, g.denominator),
                                               ctx.mul(g.numerator, f.denominator)),
                                       den});
          const auto p = out.class_of({ctx.mul(f.numerator, g.numerator), den});
          if (first) {
            t.add[c * n + d] = s;
            t.mul[c * n + d] = p;
            first = false;
          } else if (t.add[c * n + d] != s || t.mul[c * n + d] != p) {
            throw std::logic_error("localized operations depend on representatives");
          }
        }
      }
    }
  }
  t.zero = out.class_of({Elem::zero(), Elem::one()});
  t.one = out.class_of({Elem::one(), Elem::one()});
  return out;
}

std::vector<std::vector<Elem>> multiplicative_sets(const SemiringCtx& ctx) {
  // Candidates are subsets of {2, ..., k, m} joined with {1}.
  const auto elems = ctx.elements();
  const std::size_t free = elems.size() - 2;
  if (free >= 63) throw BoundExceeded("multiplicative_sets", ctx.k(), 62);
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
    std::vector<Elem> set{Elem::one()};
    for (std::size_t i = 0; i < free; ++i) {
      if ((bits >> i) & 1) set.push_back(elems[i + 2]);
    }
    if (is_multiplicative_set(ctx, set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace indigenous
