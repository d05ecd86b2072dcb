#include "indigenous/laws.hpp"

#include <array>
#include <functional>

#include "indigenous/errors.hpp"

namespace indigenous {

namespace {

enum class Domain { Elems, Naturals };

struct Law {
  std::string_view name;
  Domain domain;
  std::size_t arity;
  // Returns true when the law holds on the given tuple.
  std::function<bool(const SemiringCtx&, std::span<const Elem>)> on_elems;
  std::function<bool(const SemiringCtx&, std::uint64_t, std::uint64_t)> on_naturals;
};

Law elem_law(std::string_view name, std::size_t arity,
             std::function<bool(const SemiringCtx&, std::span<const Elem>)> check) {
  return Law{name, Domain::Elems, arity, std::move(check), {}};
}

Law natural_law(std::string_view name,
                std::function<bool(const SemiringCtx&, std::uint64_t, std::uint64_t)> check) {
  return Law{name, Domain::Naturals, 2, {}, std::move(check)};
}

const std::vector<Law>& law_table() {
  using S = const SemiringCtx&;
  using T = std::span<const Elem>;
  static const std::vector<Law> table = {
      elem_law("add_commutative", 2, [](S s, T t) { return s.add(t[0], t[1]) == s.add(t[1], t[0]); }),
      elem_law("add_associative", 3,
               [](S s, T t) {
                 return s.add(s.add(t[0], t[1]), t[2]) == s.add(t[0], s.add(t[1], t[2]));
               }),
      elem_law("mul_commutative", 2, [](S s, T t) { return s.mul(t[0], t[1]) == s.mul(t[1], t[0]); }),
      elem_law("mul_associative", 3,
               [](S s, T t) {
                 return s.mul(s.mul(t[0], t[1]), t[2]) == s.mul(t[0], s.mul(t[1], t[2]));
               }),
      elem_law("left_distributive", 3,
               [](S s, T t) {
                 return s.mul(t[0], s.add(t[1], t[2])) ==
                        s.add(s.mul(t[0], t[1]), s.mul(t[0], t[2]));
               }),
      elem_law("right_distributive", 3,
               [](S s, T t) {
                 return s.mul(s.add(t[1], t[2]), t[0]) ==
                        s.add(s.mul(t[1], t[0]), s.mul(t[2], t[0]));
               }),
      elem_law("zero_additive_identity", 1,
               [](S s, T t) {
                 return s.add(t[0], Elem::zero()) == t[0] && s.add(Elem::zero(), t[0]) == t[0];
               }),
      elem_law("one_multiplicative_identity", 1,
               [](S s, T t) {
                 return s.mul(t[0], Elem::one()) == t[0] && s.mul(Elem::one(), t[0]) == t[0];
               }),
      elem_law("zero_absorbing", 1,
               [](S s, T t) {
                 return s.mul(t[0], Elem::zero()).is_zero() && s.mul(Elem::zero(), t[0]).is_zero();
               }),
      elem_law("entire", 2,
               [](S s, T t) { return !s.mul(t[0], t[1]).is_zero() || t[0].is_zero() || t[1].is_zero(); }),
      elem_law("zerosumfree", 2,
               [](S s, T t) {
                 return !s.add(t[0], t[1]).is_zero() || (t[0].is_zero() && t[1].is_zero());
               }),
      elem_law("presemiring_closed", 2,
               [](S s, T t) {
                 if (t[0].is_zero() || t[1].is_zero()) return true;
                 return !s.add(t[0], t[1]).is_zero() && !s.mul(t[0], t[1]).is_zero();
               }),
      elem_law("order_total", 3,
               [](S s, T t) {
                 const bool reflexive = s.leq(t[0], t[0]);
                 const bool total = s.leq(t[0], t[1]) || s.leq(t[1], t[0]);
                 const bool antisymmetric = !(s.leq(t[0], t[1]) && s.leq(t[1], t[0])) || t[0] == t[1];
                 const bool transitive =
                     !(s.leq(t[0], t[1]) && s.leq(t[1], t[2])) || s.leq(t[0], t[2]);
                 return reflexive && total && antisymmetric && transitive;
               }),
      elem_law("order_zero_least_many_greatest", 1,
               [](S s, T t) { return s.leq(Elem::zero(), t[0]) && s.leq(t[0], Elem::many()); }),
      elem_law("order_add_compatible", 3,
               [](S s, T t) { return !s.leq(t[0], t[1]) || s.leq(s.add(t[0], t[2]), s.add(t[1], t[2])); }),
      elem_law("order_mul_compatible", 3,
               [](S s, T t) { return !s.leq(t[0], t[1]) || s.leq(s.mul(t[0], t[2]), s.mul(t[1], t[2])); }),
      natural_law("canonical_map_additive",
                  [](S s, std::uint64_t x, std::uint64_t y) {
                    return s.canonical_map(x + y) == s.add(s.canonical_map(x), s.canonical_map(y));
                  }),
      natural_law("canonical_map_multiplicative",
                  [](S s, std::uint64_t x, std::uint64_t y) {
                    return s.canonical_map(x * y) == s.mul(s.canonical_map(x), s.canonical_map(y));
                  }),
  };
  return table;
}

const Law& find_law(std::string_view name) {
  for (const auto& law : law_table()) {
    if (law.name == name) return law;
  }
  throw InvalidArgument("unknown law '" + std::string(name) + "'");
}

// Evaluates a law on every tuple; stops at the first violation. Law checks
// that throw (e.g. a corrupted operation producing an out-of-range value) are
// violations too.
std::optional<Witness> search(const SemiringCtx& ctx, const Law& law) {
  if (law.domain == Domain::Naturals) {
    const std::uint64_t top = 3ull * ctx.k();
    for (std::uint64_t x = 0; x <= top; ++x) {
      for (std::uint64_t y = 0; y <= top; ++y) {
        bool ok = false;
        try {
          ok = law.on_naturals(ctx, x, y);
        } catch (const Error&) {
        }
        if (!ok) return Witness{{}, {x, y}};
      }
    }
    return std::nullopt;
  }
  const auto elems = ctx.elements();
  const std::size_t n = elems.size();
  std::array<Elem, 3> tuple{};
  std::array<std::size_t, 3> idx{};
  std::size_t total = 1;
  for (std::size_t i = 0; i < law.arity; ++i) total *= n;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = 0; i < law.arity; ++i) {
      idx[i] = rest % n;
      rest /= n;
      tuple[i] = elems[idx[i]];
    }
    const std::span<const Elem> view(tuple.data(), law.arity);
    bool ok = false;
    try {
      ok = law.on_elems(ctx, view);
    } catch (const Error&) {
    }
    if (!ok) return Witness{{view.begin(), view.end()}, {}};
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string_view> law_names() {
  std::vector<std::string_view> out;
  for (const auto& law : law_table()) out.push_back(law.name);
  return out;
}

std::vector<LawReport> verify_laws(const SemiringCtx& ctx, std::uint32_t bound) {
  if (ctx.k() > bound) throw BoundExceeded("verify_laws", ctx.k(), bound);
  std::vector<LawReport> reports;
  for (const auto& law : law_table()) {
    auto witness = search(ctx, law);
    reports.push_back(LawReport{std::string(law.name), !witness.has_value(), std::move(witness)});
  }
  return reports;
}

bool violates(const SemiringCtx& ctx, std::string_view name, const Witness& witness) {
  const Law& law = find_law(name);
  for (const Elem e : witness.elems) ctx.check(e);
  try {
    if (law.domain == Domain::Naturals) {
      if (witness.naturals.size() != 2 || !witness.elems.empty()) {
        throw InvalidArgument("law '" + std::string(name) + "' takes two naturals");
      }
      return !law.on_naturals(ctx, witness.naturals[0], witness.naturals[1]);
    }
    if (witness.elems.size() != law.arity || !witness.naturals.empty()) {
      throw InvalidArgument("law '" + std::string(name) + "' takes " +
                            std::to_string(law.arity) + " elements");
    }
    return !law.on_elems(ctx, witness.elems);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error&) {
    return true;
  }
}

}  // namespace indigenous
