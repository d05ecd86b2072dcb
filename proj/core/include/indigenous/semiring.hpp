#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indigenous/elem.hpp"

namespace indigenous {

/// The Indigenous semiring S_k = {0, 1, ..., k, m}. Owns all arithmetic and
/// ordering over Elem. A context is an immutable value; copying is free.
class SemiringCtx {
 public:
  /// Throws InvalidArgument when k == 0.
  explicit SemiringCtx(std::uint32_t k);

  std::uint32_t k() const noexcept { return k_; }

  /// k + 2.
  std::size_t size() const noexcept { return static_cast<std::size_t>(k_) + 2; }

  /// 0, 1, ..., k, m in increasing order.
  std::vector<Elem> elements() const;
  /// 1, ..., k, m: the presemiring I_k.
  std::vector<Elem> nonzero_elements() const;

  bool contains(Elem e) const noexcept { return !e.is_fin() || e.value() <= k_; }
  /// Throws ContextMismatch when e carries a finite value above k.
  void check(Elem e) const;

  /// Dense index 0..k+1 following the total order; m maps to k+1.
  std::size_t index(Elem e) const;
  Elem at(std::size_t index) const;

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  bool leq(Elem a, Elem b) const;

  /// a^n for n >= 1.
  Elem pow(Elem a, std::uint64_t n) const;

  /// The epimorphism N -> S_k: 0 -> 0, n -> n for n <= k, n -> m otherwise.
  Elem canonical_map(std::uint64_t n) const;

  bool is_unit(Elem a) const;
  bool is_idempotent(Elem a) const;

  friend bool operator==(const SemiringCtx&, const SemiringCtx&) = default;

 private:
  std::uint32_t k_;
};

}  // namespace indigenous
