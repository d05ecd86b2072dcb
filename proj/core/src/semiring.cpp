#include "indigenous/semiring.hpp"

#include <string>

#include "indigenous/errors.hpp"
#include "indigenous/fault.hpp"

namespace indigenous {

using testing::Fault;

SemiringCtx::SemiringCtx(std::uint32_t k) : k_(k) {
  if (k == 0) throw InvalidArgument("the order k of S_k must be positive");
}

std::vector<Elem> SemiringCtx::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  out.push_back(Elem::zero());
  for (std::uint32_t n = 1; n <= k_; ++n) out.push_back(Elem::fin(n));
  out.push_back(Elem::many());
  return out;
}

std::vector<Elem> SemiringCtx::nonzero_elements() const {
  auto out = elements();
  out.erase(out.begin());
  return out;
}

void SemiringCtx::check(Elem e) const {
  if (!contains(e)) {
    throw ContextMismatch("element " + to_string(e) + " does not belong to S_" +
                          std::to_string(k_));
  }
}

std::size_t SemiringCtx::index(Elem e) const {
  check(e);
  switch (e.kind()) {
    case Elem::Kind::Zero:
      return 0;
    case Elem::Kind::Fin:
      return e.value();
    case Elem::Kind::Many:
      break;
  }
  return static_cast<std::size_t>(k_) + 1;
}

Elem SemiringCtx::at(std::size_t index) const {
  if (index == 0) return Elem::zero();
  if (index <= k_) return Elem::fin(static_cast<std::uint32_t>(index));
  if (index == static_cast<std::size_t>(k_) + 1) return Elem::many();
  throw InvalidArgument("index " + std::to_string(index) + " out of range for S_" +
                        std::to_string(k_));
}

Elem SemiringCtx::add(Elem a, Elem b) const {
  check(a);
  check(b);
  const Fault fault = testing::active_fault();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_many() || b.is_many()) {
    if (fault == Fault::ManyPlusOneIsK && (a.is_one() || b.is_one())) return Elem::fin(k_);
    return Elem::many();
  }
  const std::uint64_t sum = std::uint64_t{a.value()} + b.value();
  if (sum <= k_) return Elem::fin(static_cast<std::uint32_t>(sum));
  return fault == Fault::AddSaturatesToK ? Elem::fin(k_) : Elem::many();
}

Elem SemiringCtx::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  const Fault fault = testing::active_fault();
  if (a.is_zero() || b.is_zero()) {
    if (fault == Fault::ZeroTimesManyIsMany && (a.is_many() || b.is_many())) return Elem::many();
    return Elem::zero();
  }
  if (a.is_many() || b.is_many()) return Elem::many();
  const std::uint64_t product = std::uint64_t{a.value()} * b.value();
  if (product <= k_) return Elem::fin(static_cast<std::uint32_t>(product));
  return fault == Fault::MulSaturatesToK ? Elem::fin(k_) : Elem::many();
}

bool SemiringCtx::leq(Elem a, Elem b) const {
  check(a);
  check(b);
  return a <= b;
}

Elem SemiringCtx::pow(Elem a, std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("pow requires an exponent >= 1");
  Elem acc = a;
  for (std::uint64_t i = 1; i < n; ++i) {
    const Elem next = mul(acc, a);
    // Powers of 0, 1 and m are constant; once m is reached it stays.
    if (next == acc) return acc;
    acc = next;
  }
  return acc;
}

Elem SemiringCtx::canonical_map(std::uint64_t n) const {
  if (n == 0) return Elem::zero();
  if (n <= k_) return Elem::fin(static_cast<std::uint32_t>(n));
  return Elem::many();
}

bool SemiringCtx::is_unit(Elem a) const {
  check(a);
  return a.is_one();
}

bool SemiringCtx::is_idempotent(Elem a) const { return mul(a, a) == a; }

}  // namespace indigenous
