#include "indigenous/spectrum.hpp"

#include <algorithm>

namespace indigenous {

std::vector<std::size_t> vanishing_set(const std::vector<Ideal>& primes, const Ideal& ideal) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (ideal.is_subset_of(primes[i])) out.push_back(i);
  }
  return out;
}

SpectrumView spectrum(const SemiringCtx& ctx, std::uint32_t bound) {
  SpectrumView view;
  const auto ideals = enumerate_ideals(ctx, bound);
  for (const auto& ideal : ideals) {
    if (is_prime(ctx, ideal)) view.points.push_back(ideal);
  }
  for (const auto& ideal : ideals) view.closed_sets.push_back(vanishing_set(view.points, ideal));
  std::sort(view.closed_sets.begin(), view.closed_sets.end());
  view.closed_sets.erase(std::unique(view.closed_sets.begin(), view.closed_sets.end()),
                         view.closed_sets.end());
  return view;
}

bool is_sierpinski(const SpectrumView& view) {
  if (view.points.size() != 2 || view.closed_sets.size() != 3) return false;
  const auto has = [&](std::vector<std::size_t> set) {
    return std::find(view.closed_sets.begin(), view.closed_sets.end(), set) !=
           view.closed_sets.end();
  };
  return has({}) && has({0, 1});
}

}  // namespace indigenous
