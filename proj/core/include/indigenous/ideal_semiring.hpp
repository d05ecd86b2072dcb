#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indigenous/finite_semiring.hpp"
#include "indigenous/ideal.hpp"

namespace indigenous {

/// Id(S_k): every ideal of S_k under ideal sum and product. Element i of the
/// tables is elements()[i]; elements are in canonical ideal order.
class IdealSemiring {
 public:
  const SemiringCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Ideal>& elements() const noexcept { return elements_; }
  const OperationTables& tables() const noexcept { return tables_; }

  /// Throws InvalidArgument for an ideal of a different S_k.
  std::size_t index_of(const Ideal& ideal) const;

  const Ideal& sum(const Ideal& a, const Ideal& b) const;
  const Ideal& product(const Ideal& a, const Ideal& b) const;

  /// Indices of the nonzero proper ideals.
  std::vector<std::size_t> nonzero_proper() const;

 private:
  friend IdealSemiring ideal_semiring(const SemiringCtx& ctx, std::uint32_t bound);

  explicit IdealSemiring(const SemiringCtx& ctx) : ctx_(ctx) {}

  SemiringCtx ctx_;
  std::vector<Ideal> elements_;
  OperationTables tables_;
};

/// Throws BoundExceeded if k > bound.
IdealSemiring ideal_semiring(const SemiringCtx& ctx, std::uint32_t bound = kDefaultIdealBound);

/// Least n such that every product of n nonzero proper ideals is {0, m}.
/// Throws BoundExceeded if k > bound.
std::size_t nilpotency_index(const SemiringCtx& ctx, std::uint32_t bound = kDefaultIdealBound);
std::size_t nilpotency_index(const IdealSemiring& ideals);

/// Least n with 2^n > k.
std::size_t nilpotency_guarantee(std::uint32_t k) noexcept;

}  // namespace indigenous
