#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indigenous/elem.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous {

/// A positive length that may be infinite (girth of a forest, diameter of a
/// disconnected graph).
class ExtendedLength {
 public:
  static constexpr ExtendedLength infinite() noexcept { return ExtendedLength{}; }
  static constexpr ExtendedLength finite(std::size_t n) noexcept { return ExtendedLength{n}; }

  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Undefined when is_infinite().
  constexpr std::size_t value() const noexcept { return *value_; }

  friend constexpr bool operator==(const ExtendedLength&, const ExtendedLength&) = default;

 private:
  constexpr ExtendedLength() noexcept = default;
  constexpr explicit ExtendedLength(std::size_t n) noexcept : value_(n) {}

  std::optional<std::size_t> value_;
};

/// "inf" or the decimal value.
std::string to_string(ExtendedLength length);

/// IG_k: vertices 1, ..., k, m; distinct a, b adjacent iff a * b = m in S_k.
/// Vertex i (0-based) is the element i + 1 for i < k, and m for i = k.
class IndigenousGraph {
 public:
  explicit IndigenousGraph(const SemiringCtx& ctx);

  std::uint32_t k() const noexcept { return ctx_.k(); }
  const SemiringCtx& ctx() const noexcept { return ctx_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Elem>& vertices() const noexcept { return vertices_; }
  Elem vertex(std::size_t v) const { return vertices_.at(v); }
  /// Throws InvalidArgument for Zero (not a vertex) and ContextMismatch for
  /// values above k.
  std::size_t vertex_index(Elem e) const;

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * vertex_count() + v] != 0; }
  bool adjacent(Elem a, Elem b) const { return adjacent(vertex_index(a), vertex_index(b)); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_.at(v); }
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

  /// Each edge once as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  SemiringCtx ctx_;
  std::vector<Elem> vertices_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

IndigenousGraph build_graph(std::uint32_t k);

inline constexpr std::uint32_t kDefaultGraphSearchBound = 24;

ExtendedLength diameter(const IndigenousGraph& g);
ExtendedLength girth(const IndigenousGraph& g);

/// Exact maximum clique by branch and bound. Throws BoundExceeded if k > bound.
std::size_t clique_number(const IndigenousGraph& g, std::uint32_t bound = kDefaultGraphSearchBound);
/// A maximum clique as sorted vertex indices.
std::vector<std::size_t> maximum_clique(const IndigenousGraph& g,
                                        std::uint32_t bound = kDefaultGraphSearchBound);
/// Exact chromatic number by backtracking, starting from the clique number.
std::size_t chromatic_number(const IndigenousGraph& g,
                             std::uint32_t bound = kDefaultGraphSearchBound);

/// floor(k/2) + 1, the guaranteed lower bound on clique and chromatic number.
std::size_t clique_lower_bound(std::uint32_t k) noexcept;

/// {k - floor(k/2), ..., k, m} as vertex indices; {2, m} for k = 2, where
/// 1 * 2 = 2 keeps the run from being a clique.
std::vector<std::size_t> explicit_clique(const IndigenousGraph& g);

bool is_clique(const IndigenousGraph& g, const std::vector<std::size_t>& vertices);

struct GraphInvariants {
  ExtendedLength diameter = ExtendedLength::infinite();
  ExtendedLength girth = ExtendedLength::infinite();
  std::size_t clique_number = 0;
  std::size_t chromatic_number = 0;
};

GraphInvariants invariants(const IndigenousGraph& g, std::uint32_t bound = kDefaultGraphSearchBound);

/// "u v" per line, vertices rendered as elements.
std::string to_edge_list(const IndigenousGraph& g);

}  // namespace indigenous
