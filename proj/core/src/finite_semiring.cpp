#include "indigenous/finite_semiring.hpp"

#include <array>

namespace indigenous {

OperationTables tables_of(const SemiringCtx& ctx) {
  OperationTables t;
  t.size = ctx.size();
  t.add.resize(t.size * t.size);
  t.mul.resize(t.size * t.size);
  const auto elems = ctx.elements();
  for (std::size_t a = 0; a < t.size; ++a) {
    for (std::size_t b = 0; b < t.size; ++b) {
      t.add[a * t.size + b] = ctx.index(ctx.add(elems[a], elems[b]));
      t.mul[a * t.size + b] = ctx.index(ctx.mul(elems[a], elems[b]));
    }
  }
  t.zero = 0;
  t.one = 1;
  return t;
}

OperationTables boolean_semiring() {
  return OperationTables{2, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1};
}

bool satisfies_semiring_axioms(const OperationTables& t) {
  const std::size_t n = t.size;
  for (std::size_t a = 0; a < n; ++a) {
    if (t.sum(a, t.zero) != a || t.product(a, t.one) != a || t.product(a, t.zero) != t.zero) {
      return false;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (t.sum(a, b) != t.sum(b, a) || t.product(a, b) != t.product(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (t.sum(t.sum(a, b), c) != t.sum(a, t.sum(b, c))) return false;
        if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c))) return false;
        if (t.product(a, t.sum(b, c)) != t.sum(t.product(a, b), t.product(a, c))) return false;
      }
    }
  }
  return true;
}

bool is_entire(const OperationTables& t) {
  for (std::size_t a = 0; a < t.size; ++a) {
    for (std::size_t b = 0; b < t.size; ++b) {
      if (a != t.zero && b != t.zero && t.product(a, b) == t.zero) return false;
    }
  }
  return true;
}

bool is_zerosumfree(const OperationTables& t) {
  for (std::size_t a = 0; a < t.size; ++a) {
    for (std::size_t b = 0; b < t.size; ++b) {
      if ((a != t.zero || b != t.zero) && t.sum(a, b) == t.zero) return false;
    }
  }
  return true;
}

bool is_additively_idempotent(const OperationTables& t) {
  for (std::size_t a = 0; a < t.size; ++a) {
    if (t.sum(a, a) != a) return false;
  }
  return true;
}

namespace {

// Isomorphism-invariant fingerprint of an element.
std::array<std::size_t, 6> signature(const OperationTables& t, std::size_t a) {
  std::array<std::size_t, 6> sig{};
  sig[0] = t.sum(a, a) == a;
  sig[1] = t.product(a, a) == a;
  for (std::size_t b = 0; b < t.size; ++b) {
    sig[2] += t.sum(a, b) == a;
    sig[3] += t.product(a, b) == a;
    sig[4] += t.sum(a, b) == b;
    sig[5] += t.product(a, b) == b;
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const OperationTables& a, const OperationTables& b)
      : a_(a), b_(b), map_(a.size, kNone), used_(b.size, false) {
    for (std::size_t x = 0; x < a.size; ++x) sig_a_.push_back(signature(a, x));
    for (std::size_t y = 0; y < b.size; ++y) sig_b_.push_back(signature(b, y));
  }

  std::optional<std::vector<std::size_t>> run() {
    if (a_.size != b_.size) return std::nullopt;
    if (!assign(a_.zero, b_.zero)) return std::nullopt;
    if (a_.one != a_.zero && !assign(a_.one, b_.one)) return std::nullopt;
    if (!search(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool consistent(std::size_t x) const {
    for (std::size_t y = 0; y < a_.size; ++y) {
      if (map_[y] == kNone) continue;
      for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const auto s = map_[a_.sum(p, q)];
        if (s != kNone && s != b_.sum(map_[p], map_[q])) return false;
        const auto m = map_[a_.product(p, q)];
        if (m != kNone && m != b_.product(map_[p], map_[q])) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t x, std::size_t y) {
    if (used_[y] || sig_a_[x] != sig_b_[y]) return false;
    map_[x] = y;
    used_[y] = true;
    if (consistent(x)) return true;
    map_[x] = kNone;
    used_[y] = false;
    return false;
  }

  bool search(std::size_t x) {
    if (x == a_.size) return true;
    if (map_[x] != kNone) return search(x + 1);
    for (std::size_t y = 0; y < b_.size; ++y) {
      if (!assign(x, y)) continue;
      if (search(x + 1)) return true;
      map_[x] = kNone;
      used_[y] = false;
    }
    return false;
  }

  const OperationTables& a_;
  const OperationTables& b_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::array<std::size_t, 6>> sig_a_;
  std::vector<std::array<std::size_t, 6>> sig_b_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const OperationTables& a,
                                                         const OperationTables& b) {
  return IsoSearch(a, b).run();
}

}  // namespace indigenous
