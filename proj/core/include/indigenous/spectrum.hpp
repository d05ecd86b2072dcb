#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indigenous/ideal.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// Spec(S_k) with its Zariski topology. Closed sets are sets of indices into
/// points, each sorted; the family is sorted and duplicate free.
struct SpectrumView {
  std::vector<Ideal> points;
  std::vector<std::vector<std::size_t>> closed_sets;
};

/// V(I): indices of the primes containing I.
std::vector<std::size_t> vanishing_set(const std::vector<Ideal>& primes, const Ideal& ideal);

/// Throws BoundExceeded if k > bound.
SpectrumView spectrum(const SemiringCtx& ctx, std::uint32_t bound = kDefaultIdealBound);

/// Two points and exactly three closed sets.
bool is_sierpinski(const SpectrumView& view);

}  // namespace indigenous
