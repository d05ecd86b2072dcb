#include "indigenous/ideal.hpp"

#include <algorithm>
#include <cstdint>

#include "indigenous/errors.hpp"

namespace indigenous {

namespace {

void require_same(const SemiringCtx& ctx, const Ideal& ideal) {
  if (!(ideal.ctx() == ctx)) {
    throw ContextMismatch("ideal of S_" + std::to_string(ideal.ctx().k()) + " used with S_" +
                          std::to_string(ctx.k()));
  }
}

std::vector<Elem> normalized(const SemiringCtx& ctx, std::vector<Elem> members) {
  for (const Elem e : members) ctx.check(e);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

// Membership flags indexed by SemiringCtx::index.
std::vector<char> flags_of(const SemiringCtx& ctx, const std::vector<Elem>& members) {
  std::vector<char> flags(ctx.size(), 0);
  for (const Elem e : members) flags[ctx.index(e)] = 1;
  return flags;
}

std::vector<Elem> members_of(const SemiringCtx& ctx, const std::vector<char>& flags) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(ctx.at(i));
  }
  return out;
}

// Fixpoint of: add 0, absorb by every element, add pairwise sums.
std::vector<char> close(const SemiringCtx& ctx, std::vector<char> flags) {
  const auto elems = ctx.elements();
  const std::size_t n = elems.size();
  flags[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!flags[a]) continue;
      for (std::size_t s = 0; s < n; ++s) {
        const auto p = ctx.index(ctx.mul(elems[s], elems[a]));
        if (!flags[p]) flags[p] = 1, changed = true;
      }
      for (std::size_t b = a; b < n; ++b) {
        if (!flags[b]) continue;
        const auto q = ctx.index(ctx.add(elems[a], elems[b]));
        if (!flags[q]) flags[q] = 1, changed = true;
      }
    }
  }
  return flags;
}

bool satisfies_axioms(const SemiringCtx& ctx, const std::vector<Elem>& members) {
  if (members.empty() || !members.front().is_zero()) return false;
  const auto flags = flags_of(ctx, members);
  for (const Elem a : members) {
    for (const Elem b : members) {
      if (!flags[ctx.index(ctx.add(a, b))]) return false;
    }
    for (std::size_t s = 0; s < ctx.size(); ++s) {
      if (!flags[ctx.index(ctx.mul(ctx.at(s), a))]) return false;
    }
  }
  return true;
}

}  // namespace

Ideal Ideal::from_members(const SemiringCtx& ctx, std::vector<Elem> members) {
  members = normalized(ctx, std::move(members));
  if (!satisfies_axioms(ctx, members)) {
    throw InvalidArgument("{" + join(members) + "} is not an ideal of S_" + std::to_string(ctx.k()));
  }
  return Ideal(Trusted{}, ctx, std::move(members));
}

bool Ideal::contains(Elem e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool Ideal::is_subset_of(const Ideal& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool is_ideal(const SemiringCtx& ctx, const std::vector<Elem>& members) {
  return satisfies_axioms(ctx, normalized(ctx, members));
}

std::vector<Ideal> enumerate_ideals(const SemiringCtx& ctx, std::uint32_t bound) {
  if (ctx.k() > bound) throw BoundExceeded("enumerate_ideals", ctx.k(), bound);
  const std::size_t n = ctx.size();
  const auto elems = ctx.elements();

  // Precomputed index tables; candidate subsets are masks over indices 1..k+1
  // with 0 always present.
  std::vector<std::size_t> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = ctx.index(ctx.add(elems[a], elems[b]));
      mul[a * n + b] = ctx.index(ctx.mul(elems[a], elems[b]));
    }
  }

  std::vector<Ideal> out;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const std::uint64_t mask = (bits << 1) | 1;
    auto in = [&](std::size_t i) { return ((mask >> i) & 1) != 0; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (std::size_t s = 0; s < n && ok; ++s) ok = in(mul[s * n + a]);
      for (std::size_t b = a; b < n && ok; ++b) {
        if (in(b)) ok = in(add[a * n + b]);
      }
    }
    if (!ok) continue;
    std::vector<Elem> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (in(i)) members.push_back(elems[i]);
    }
    out.push_back(Ideal(Ideal::Trusted{}, ctx, std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ideal ideal_generated(const SemiringCtx& ctx, const std::vector<Elem>& gens) {
  const auto flags = close(ctx, flags_of(ctx, normalized(ctx, gens)));
  return Ideal(Ideal::Trusted{}, ctx, members_of(ctx, flags));
}

Ideal zero_ideal(const SemiringCtx& ctx) { return ideal_generated(ctx, {}); }

Ideal whole_ideal(const SemiringCtx& ctx) { return ideal_generated(ctx, {Elem::one()}); }

Ideal maximal_ideal(const SemiringCtx& ctx) {
  auto members = ctx.elements();
  members.erase(members.begin() + 1);
  return Ideal::from_members(ctx, std::move(members));
}

Ideal smallest_nonzero_ideal(const SemiringCtx& ctx) { return ideal_generated(ctx, {Elem::many()}); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a.ctx(), b);
  const auto& ctx = a.ctx();
  std::vector<Elem> sums;
  for (const Elem x : a.members()) {
    for (const Elem y : b.members()) sums.push_back(ctx.add(x, y));
  }
  return ideal_generated(ctx, sums);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a.ctx(), b);
  const auto& ctx = a.ctx();
  std::vector<Elem> products;
  for (const Elem x : a.members()) {
    for (const Elem y : b.members()) products.push_back(ctx.mul(x, y));
  }
  return ideal_generated(ctx, products);
}

bool is_prime(const SemiringCtx& ctx, const Ideal& ideal) {
  require_same(ctx, ideal);
  if (ideal.is_whole()) return false;
  const auto elems = ctx.elements();
  for (const Elem a : elems) {
    if (ideal.contains(a)) continue;
    for (const Elem b : elems) {
      if (!ideal.contains(b) && ideal.contains(ctx.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_maximal(const SemiringCtx& ctx, const Ideal& ideal, std::uint32_t bound) {
  require_same(ctx, ideal);
  if (ideal.is_whole()) return false;
  for (const auto& other : enumerate_ideals(ctx, bound)) {
    if (other.is_whole() || other == ideal) continue;
    if (ideal.is_subset_of(other)) return false;
  }
  return true;
}

bool is_subtractive(const SemiringCtx& ctx, const Ideal& ideal) {
  require_same(ctx, ideal);
  for (const Elem a : ideal.members()) {
    for (const Elem b : ctx.elements()) {
      if (ideal.contains(ctx.add(a, b)) && !ideal.contains(b)) return false;
    }
  }
  return true;
}

Ideal radical(const SemiringCtx& ctx, const Ideal& ideal) {
  require_same(ctx, ideal);
  std::vector<Elem> members;
  for (const Elem a : ctx.elements()) {
    // The powers a, a^2, ... are eventually constant (0, 1 or m), so
    // iterating until a repeat visits every power.
    Elem power = a;
    for (std::size_t step = 0; step <= ctx.size(); ++step) {
      if (ideal.contains(power)) {
        members.push_back(a);
        break;
      }
      const Elem next = ctx.mul(power, a);
      if (next == power) break;
      power = next;
    }
  }
  return Ideal::from_members(ctx, std::move(members));
}

bool is_radical(const SemiringCtx& ctx, const Ideal& ideal) { return radical(ctx, ideal) == ideal; }

std::vector<std::pair<Elem, Ideal>> principal_ideals(const SemiringCtx& ctx) {
  std::vector<std::pair<Elem, Ideal>> out;
  for (const Elem a : ctx.nonzero_elements()) out.emplace_back(a, ideal_generated(ctx, {a}));
  return out;
}

}  // namespace indigenous
