#include "indigenous/ideal_semiring.hpp"

#include <algorithm>
#include <set>

#include "indigenous/errors.hpp"

namespace indigenous {

std::size_t IdealSemiring::index_of(const Ideal& ideal) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), ideal);
  if (it == elements_.end() || !(*it == ideal)) {
    throw InvalidArgument("{" + join(ideal.members()) + "} is not an ideal of S_" +
                          std::to_string(ctx_.k()));
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

const Ideal& IdealSemiring::sum(const Ideal& a, const Ideal& b) const {
  return elements_[tables_.sum(index_of(a), index_of(b))];
}

const Ideal& IdealSemiring::product(const Ideal& a, const Ideal& b) const {
  return elements_[tables_.product(index_of(a), index_of(b))];
}

std::vector<std::size_t> IdealSemiring::nonzero_proper() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!elements_[i].is_zero() && elements_[i].is_proper()) out.push_back(i);
  }
  return out;
}

IdealSemiring ideal_semiring(const SemiringCtx& ctx, std::uint32_t bound) {
  IdealSemiring out(ctx);
  out.elements_ = enumerate_ideals(ctx, bound);
  const std::size_t n = out.elements_.size();
  auto& t = out.tables_;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = out.index_of(ideal_sum(out.elements_[i], out.elements_[j]));
      t.mul[i * n + j] = out.index_of(ideal_product(out.elements_[i], out.elements_[j]));
    }
  }
  t.zero = out.index_of(zero_ideal(ctx));
  t.one = out.index_of(whole_ideal(ctx));
  return out;
}

std::size_t nilpotency_index(const IdealSemiring& ideals) {
  const auto factors = ideals.nonzero_proper();
  const auto target = ideals.index_of(smallest_nonzero_ideal(ideals.ctx()));
  const auto& t = ideals.tables();
  std::set<std::size_t> products(factors.begin(), factors.end());
  // The sets of n-fold products are drawn from a finite family; if they stop
  // changing without reaching {s_k}, the monoid is not nilpotent.
  std::set<std::set<std::size_t>> seen;
  for (std::size_t n = 1;; ++n) {
    if (products == std::set<std::size_t>{target}) return n;
    if (!seen.insert(products).second) {
      throw Error("the monoid of nonzero ideals of S_" + std::to_string(ideals.ctx().k()) +
                  " is not nilpotent");
    }
    std::set<std::size_t> next;
    for (const auto p : products) {
      for (const auto f : factors) next.insert(t.product(p, f));
    }
    products = std::move(next);
  }
}

std::size_t nilpotency_index(const SemiringCtx& ctx, std::uint32_t bound) {
  return nilpotency_index(ideal_semiring(ctx, bound));
}

std::size_t nilpotency_guarantee(std::uint32_t k) noexcept {
  std::size_t n = 0;
  std::uint64_t power = 1;
  while (power <= k) {
    power <<= 1;
    ++n;
  }
  return n;
}

}  // namespace indigenous
