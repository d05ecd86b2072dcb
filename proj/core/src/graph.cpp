#include "indigenous/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

#include "indigenous/errors.hpp"

namespace indigenous {

std::string to_string(ExtendedLength length) {
  return length.is_infinite() ? "inf" : std::to_string(length.value());
}

IndigenousGraph::IndigenousGraph(const SemiringCtx& ctx)
    : ctx_(ctx), vertices_(ctx.nonzero_elements()) {
  const std::size_t n = vertices_.size();
  adjacency_.assign(n * n, 0);
  neighbors_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && ctx_.mul(vertices_[u], vertices_[v]).is_many()) {
        adjacency_[u * n + v] = 1;
        neighbors_[u].push_back(v);
      }
    }
  }
}

std::size_t IndigenousGraph::vertex_index(Elem e) const {
  if (e.is_zero()) throw InvalidArgument("0 is not a vertex of IG_k");
  return ctx_.index(e) - 1;
}

std::vector<std::pair<std::size_t, std::size_t>> IndigenousGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (std::size_t v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

IndigenousGraph build_graph(std::uint32_t k) { return IndigenousGraph(SemiringCtx(k)); }

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs(const IndigenousGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

void require_bound(const IndigenousGraph& g, std::uint32_t bound, const char* what) {
  if (g.k() > bound) throw BoundExceeded(what, g.k(), bound);
  // Vertex sets are packed into 64-bit masks.
  if (g.vertex_count() > 64) throw BoundExceeded(what, g.k(), 63);
}

using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const IndigenousGraph& g) {
  std::vector<Mask> out(g.vertex_count(), 0);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (auto v : g.neighbors(u)) out[u] |= Mask{1} << v;
  }
  return out;
}

// Bron-Kerbosch with Tomita pivoting; prunes branches that cannot beat the
// incumbent.
void expand(const std::vector<Mask>& nbr, Mask current, std::size_t current_size, Mask candidates,
            Mask excluded, Mask& best, std::size_t& best_size) {
  if (candidates == 0 && excluded == 0) {
    if (current_size > best_size) {
      best = current;
      best_size = current_size;
    }
    return;
  }
  if (current_size + static_cast<std::size_t>(std::popcount(candidates)) <= best_size) return;
  std::size_t pivot = 0;
  int pivot_cover = -1;
  for (Mask pool = candidates | excluded; pool; pool &= pool - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(pool));
    const int cover = std::popcount(candidates & nbr[u]);
    if (cover > pivot_cover) {
      pivot_cover = cover;
      pivot = u;
    }
  }
  for (Mask branch = candidates & ~nbr[pivot]; branch; branch &= branch - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(branch));
    const Mask bit = Mask{1} << v;
    expand(nbr, current | bit, current_size + 1, candidates & nbr[v], excluded & nbr[v], best,
           best_size);
    candidates &= ~bit;
    excluded |= bit;
  }
}

bool color_from(const IndigenousGraph& g, const std::vector<std::size_t>& order, std::size_t pos,
                std::size_t colors, std::size_t used, std::vector<std::size_t>& assignment) {
  if (pos == order.size()) return true;
  const auto v = order[pos];
  // A fresh color is interchangeable with any other fresh one, so only the
  // first unused color is tried.
  const std::size_t limit = std::min(colors, used + 1);
  for (std::size_t c = 0; c < limit; ++c) {
    bool clash = false;
    for (auto w : g.neighbors(v)) {
      if (assignment[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    assignment[v] = c;
    if (color_from(g, order, pos + 1, colors, std::max(used, c + 1), assignment)) return true;
    assignment[v] = kUnreached;
  }
  return false;
}

}  // namespace

ExtendedLength diameter(const IndigenousGraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    for (auto d : bfs(g, s)) {
      if (d == kUnreached) return ExtendedLength::infinite();
      best = std::max(best, d);
    }
  }
  return ExtendedLength::finite(best);
}

ExtendedLength girth(const IndigenousGraph& g) {
  // For each edge (u, v): drop it and find the shortest u-v path; together
  // with the edge this is the shortest cycle through (u, v).
  std::size_t best = kUnreached;
  const std::size_t n = g.vertex_count();
  for (const auto& [u, v] : g.edges()) {
    std::vector<std::size_t> dist(n, kUnreached);
    std::deque<std::size_t> queue{u};
    dist[u] = 0;
    while (!queue.empty() && dist[v] == kUnreached) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : g.neighbors(x)) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[v] != kUnreached) best = std::min(best, dist[v] + 1);
  }
  return best == kUnreached ? ExtendedLength::infinite() : ExtendedLength::finite(best);
}

std::vector<std::size_t> maximum_clique(const IndigenousGraph& g, std::uint32_t bound) {
  require_bound(g, bound, "clique_number");
  const auto nbr = neighbor_masks(g);
  const Mask all = g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
  Mask best = 0;
  std::size_t best_size = 0;
  expand(nbr, 0, 0, all, 0, best, best_size);
  std::vector<std::size_t> out;
  for (; best; best &= best - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(best)));
  return out;
}

std::size_t clique_number(const IndigenousGraph& g, std::uint32_t bound) {
  return maximum_clique(g, bound).size();
}

std::size_t chromatic_number(const IndigenousGraph& g, std::uint32_t bound) {
  require_bound(g, bound, "chromatic_number");
  const std::size_t n = g.vertex_count();
  // Color a maximum clique first, then the rest by decreasing degree.
  const auto clique = maximum_clique(g, bound);
  std::vector<std::size_t> order = clique;
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < n; ++v) {
    if (!std::binary_search(clique.begin(), clique.end(), v)) rest.push_back(v);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  order.insert(order.end(), rest.begin(), rest.end());

  for (std::size_t colors = std::max<std::size_t>(clique.size(), 1); colors <= n; ++colors) {
    std::vector<std::size_t> assignment(n, kUnreached);
    if (color_from(g, order, 0, colors, 0, assignment)) return colors;
  }
  return n;
}

std::size_t clique_lower_bound(std::uint32_t k) noexcept { return k / 2 + 1; }

std::vector<std::size_t> explicit_clique(const IndigenousGraph& g) {
  const std::uint32_t k = g.k();
  std::vector<std::size_t> out;
  if (k == 2) return {1, 2};
  for (std::uint32_t a = k - k / 2; a <= k; ++a) out.push_back(a - 1);
  out.push_back(k);
  return out;
}

bool is_clique(const IndigenousGraph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

GraphInvariants invariants(const IndigenousGraph& g, std::uint32_t bound) {
  return GraphInvariants{diameter(g), girth(g), clique_number(g, bound), chromatic_number(g, bound)};
}

std::string to_edge_list(const IndigenousGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += to_string(g.vertex(u));
    out += ' ';
    out += to_string(g.vertex(v));
    out += '\n';
  }
  return out;
}

}  // namespace indigenous
