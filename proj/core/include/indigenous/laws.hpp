#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indigenous/elem.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// Elements (or, for the canonical-map laws, naturals) that violate a law.
struct Witness {
  std::vector<Elem> elems;
  std::vector<std::uint64_t> naturals;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LawReport {
  std::string law_name;
  bool holds = true;
  std::optional<Witness> counterexample;
};

inline constexpr std::uint32_t kDefaultLawBound = 64;

/// Names of every law checked by verify_laws, in report order.
std::vector<std::string_view> law_names();

/// Exhaustively checks the semiring, information-algebra and ordered-semiring
/// laws of S_k over all pairs and triples, plus the homomorphism property of
/// canonical_map on [0, 3k]. The first counterexample found is recorded.
/// Throws BoundExceeded if k > bound.
std::vector<LawReport> verify_laws(const SemiringCtx& ctx,
                                   std::uint32_t bound = kDefaultLawBound);

/// Re-evaluates a single law on a witness; true when the witness really is a
/// violation. Throws InvalidArgument for an unknown law or a malformed witness.
bool violates(const SemiringCtx& ctx, std::string_view law, const Witness& witness);

}  // namespace indigenous
