#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indigenous/semiring.hpp"

namespace indigenous {

/// Cayley tables of a finite semiring on the carrier {0, ..., size-1}.
struct OperationTables {
  std::size_t size = 0;
  std::vector<std::size_t> add;  // row-major, size * size
  std::vector<std::size_t> mul;
  std::size_t zero = 0;
  std::size_t one = 0;

  std::size_t sum(std::size_t a, std::size_t b) const { return add[a * size + b]; }
  std::size_t product(std::size_t a, std::size_t b) const { return mul[a * size + b]; }
};

/// Tables of S_k with carrier indices given by SemiringCtx::index.
OperationTables tables_of(const SemiringCtx& ctx);

/// The Boolean semiring {0, 1} with 1 + 1 = 1.
OperationTables boolean_semiring();

/// Commutative semiring axioms: both operations associative and commutative,
/// distributivity, zero and one neutral, zero absorbing.
bool satisfies_semiring_axioms(const OperationTables& t);
bool is_entire(const OperationTables& t);
bool is_zerosumfree(const OperationTables& t);
bool is_additively_idempotent(const OperationTables& t);

/// Bijection f from a's carrier to b's carrier preserving both tables and the
/// constants, found by backtracking with invariant-based pruning.
std::optional<std::vector<std::size_t>> find_isomorphism(const OperationTables& a,
                                                         const OperationTables& b);

}  // namespace indigenous
