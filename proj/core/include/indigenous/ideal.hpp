#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "indigenous/elem.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// An ideal of S_k: contains 0, closed under addition, absorbs
/// multiplication by every element. Members are kept sorted.
class Ideal {
 public:
  /// Validates the ideal axioms; throws InvalidArgument if they fail and
  /// ContextMismatch if a member is not in S_k. Duplicates are removed.
  static Ideal from_members(const SemiringCtx& ctx, std::vector<Elem> members);

  const SemiringCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool contains(Elem e) const;
  bool is_zero() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == ctx_.size(); }
  bool is_proper() const noexcept { return !is_whole(); }
  bool is_subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ctx_ == b.ctx_ && a.members_ == b.members_;
  }

  /// Canonical order: cardinality, then lexicographic on sorted members.
  friend bool operator<(const Ideal& a, const Ideal& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  struct Trusted {};
  Ideal(Trusted, const SemiringCtx& ctx, std::vector<Elem> members)
      : ctx_(ctx), members_(std::move(members)) {}

  friend Ideal ideal_generated(const SemiringCtx& ctx, const std::vector<Elem>& gens);
  friend std::vector<Ideal> enumerate_ideals(const SemiringCtx& ctx, std::uint32_t bound);

  SemiringCtx ctx_;
  std::vector<Elem> members_;
};

/// True when the (deduplicated) set satisfies the ideal axioms in S_k.
bool is_ideal(const SemiringCtx& ctx, const std::vector<Elem>& members);

inline constexpr std::uint32_t kDefaultIdealBound = 16;

/// Every ideal of S_k in canonical order, by brute force over all subsets
/// containing 0. Throws BoundExceeded if k > bound.
std::vector<Ideal> enumerate_ideals(const SemiringCtx& ctx, std::uint32_t bound = kDefaultIdealBound);

/// Least ideal containing gens (closure under absorption and addition).
Ideal ideal_generated(const SemiringCtx& ctx, const std::vector<Elem>& gens);

Ideal zero_ideal(const SemiringCtx& ctx);
Ideal whole_ideal(const SemiringCtx& ctx);
/// S_k \ {1}, the unique maximal ideal.
Ideal maximal_ideal(const SemiringCtx& ctx);
/// {0, m}, the smallest nonzero ideal.
Ideal smallest_nonzero_ideal(const SemiringCtx& ctx);

/// Ideal sum and product, each taken as the generated ideal.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

bool is_prime(const SemiringCtx& ctx, const Ideal& ideal);
/// Requires enumeration of the lattice; throws BoundExceeded if k > bound.
bool is_maximal(const SemiringCtx& ctx, const Ideal& ideal, std::uint32_t bound = kDefaultIdealBound);
bool is_subtractive(const SemiringCtx& ctx, const Ideal& ideal);
/// { a : a^n in I for some n >= 1 }.
Ideal radical(const SemiringCtx& ctx, const Ideal& ideal);
bool is_radical(const SemiringCtx& ctx, const Ideal& ideal);

/// (a) for every nonzero a in S_k, paired with its generator.
std::vector<std::pair<Elem, Ideal>> principal_ideals(const SemiringCtx& ctx);

}  // namespace indigenous
