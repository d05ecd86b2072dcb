#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "indigenous/elem.hpp"

/// Plain-integer model of S_k used as a test oracle: 0..k are themselves
/// and m is encoded as k + 1, so both operations are min(., k + 1).
namespace oracle {

inline int encode(std::uint32_t k, indigenous::Elem e) {
  if (e.is_zero()) return 0;
  if (e.is_many()) return static_cast<int>(k) + 1;
  return static_cast<int>(e.value());
}

inline indigenous::Elem decode(std::uint32_t k, int v) {
  if (v == 0) return indigenous::Elem::zero();
  if (v == static_cast<int>(k) + 1) return indigenous::Elem::many();
  return indigenous::Elem::fin(static_cast<std::uint32_t>(v));
}

inline int add(std::uint32_t k, int a, int b) { return std::min(a + b, static_cast<int>(k) + 1); }

inline int mul(std::uint32_t k, int a, int b) {
  if (a == 0 || b == 0) return 0;
  return std::min(a * b, static_cast<int>(k) + 1);
}

/// Every subset closed under + and absorbing under *, found by scanning
/// all subsets that contain 0.
inline std::vector<std::set<int>> ideals(std::uint32_t k) {
  const int n = static_cast<int>(k) + 2;
  std::vector<std::set<int>> out;
  for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
    std::set<int> s{0};
    for (int i = 0; i < n - 1; ++i) {
      if (bits >> i & 1) s.insert(i + 1);
    }
    bool ok = true;
    for (const int a : s) {
      for (const int b : s) ok = ok && s.count(add(k, a, b));
      for (int r = 0; r < n; ++r) ok = ok && s.count(mul(k, r, a));
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// All-pairs shortest paths of IG_k (vertices 1..k+1) by Floyd-Warshall.
inline std::vector<std::vector<int>> distances(std::uint32_t k) {
  const int n = static_cast<int>(k) + 1;
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (i != j && mul(k, i + 1, j + 1) == static_cast<int>(k) + 1) d[i][j] = 1;
    }
  }
  for (int via = 0; via < n; ++via) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][via] + d[via][j]);
    }
  }
  return d;
}

/// Largest clique of IG_k by scanning every vertex subset.
inline int clique_number(std::uint32_t k) {
  const int n = static_cast<int>(k) + 1;
  const int many = n;
  int best = 0;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    int size = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(bits >> i & 1)) continue;
      ++size;
      for (int j = i + 1; j < n; ++j) {
        if ((bits >> j & 1) && mul(k, i + 1, j + 1) != many) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace oracle
