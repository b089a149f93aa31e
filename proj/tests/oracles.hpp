#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond Graph::adjacent and Graph::order.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "turanpack/graph.hpp"

namespace oracle {

inline std::vector<std::uint32_t> independent_p_sets(const turanpack::Graph& g, int p) {
  const int n = g.order();
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != p) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((m >> u & 1) && (m >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

/// Enumerate all k-tuples of independent p-sets (n <= 20).
inline bool has_disjoint_independent_sets(const turanpack::Graph& g, int k, int p) {
  const auto sets = independent_p_sets(g, p);
  std::function<bool(std::size_t, int, std::uint32_t)> go = [&](std::size_t from, int left,
                                                                std::uint32_t used) {
    if (left == 0) return true;
    for (std::size_t i = from; i < sets.size(); ++i)
      if (!(sets[i] & used) && go(i + 1, left - 1, used | sets[i])) return true;
    return false;
  };
  return go(0, k, 0);
}

inline int independence_number(const turanpack::Graph& g) {
  for (int a = g.order(); a > 0; --a)
    if (!independent_p_sets(g, a).empty()) return a;
  return 0;
}

/// Every labeled graph on n <= 7 vertices, as a bitmask over the C(n,2) pairs.
struct PairIndex {
  int n;
  std::vector<std::pair<int, int>> pairs;
  explicit PairIndex(int n_) : n(n_) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
};

/// Edge masks of every labeled copy of k disjoint K_p inside K_n.
inline std::vector<std::uint32_t> pattern_masks(const PairIndex& idx, int k, int p) {
  const int n = idx.n;
  auto pair_bit = [&](int u, int v) {
    for (std::size_t i = 0; i < idx.pairs.size(); ++i)
      if (idx.pairs[i] == std::make_pair(std::min(u, v), std::max(u, v))) return 1u << i;
    return 0u;
  };
  std::vector<std::uint32_t> out;
  std::vector<int> label(n, -1);
  // Assign vertices to copies 0..k-1 with copy minima increasing.
  std::function<void(int, int)> go = [&](int copy, int start) {
    if (copy == k) {
      std::uint32_t m = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (label[u] >= 0 && label[u] == label[v]) m |= pair_bit(u, v);
      out.push_back(m);
      return;
    }
    std::function<void(int, int)> pick = [&](int from, int need) {
      if (need == 0) {
        int first = -1;
        for (int u = 0; u < n; ++u)
          if (label[u] == copy) {
            first = u;
            break;
          }
        go(copy + 1, first + 1);
        return;
      }
      for (int u = from; u < n; ++u)
        if (label[u] < 0) {
          label[u] = copy;
          pick(u + 1, need - 1);
          label[u] = -1;
        }
    };
    // The copy's minimum vertex is at least `start`.
    for (int u = start; u < n; ++u)
      if (label[u] < 0) {
        label[u] = copy;
        pick(u + 1, p - 1);
        label[u] = -1;
      }
  };
  if (k * p <= n) go(0, 0);
  return out;
}

/// max e(G) over all graphs on n vertices containing no k disjoint K_p.
inline int exhaustive_ex(int n, int k, int p) {
  PairIndex idx(n);
  const auto masks = pattern_masks(idx, k, p);
  const int m = static_cast<int>(idx.pairs.size());
  int best = 0;
  for (std::uint32_t g = 0; g < (1u << m); ++g) {
    const int e = std::popcount(g);
    if (e <= best) continue;
    bool free = true;
    for (auto pm : masks)
      if ((g & pm) == pm) {
        free = false;
        break;
      }
    if (free) best = e;
  }
  return best;
}

/// max e(G) over graphs on n <= 7 vertices containing no disjoint K_a and K_b.
inline int exhaustive_ex_union(int n, int a, int b) {
  PairIndex idx(n);
  const int m = static_cast<int>(idx.pairs.size());
  auto clique_mask = [&](std::uint32_t vs) {
    std::uint32_t out = 0;
    for (int i = 0; i < m; ++i)
      if ((vs >> idx.pairs[i].first & 1) && (vs >> idx.pairs[i].second & 1)) out |= 1u << i;
    return out;
  };
  std::vector<std::uint32_t> masks;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (std::popcount(x) != a) continue;
    for (std::uint32_t y = 0; y < (1u << n); ++y)
      if (std::popcount(y) == b && !(x & y)) masks.push_back(clique_mask(x) | clique_mask(y));
  }
  int best = 0;
  for (std::uint32_t g = 0; g < (1u << m); ++g) {
    const int e = std::popcount(g);
    if (e <= best) continue;
    if (std::none_of(masks.begin(), masks.end(), [&](std::uint32_t pm) { return (g & pm) == pm; }))
      best = e;
  }
  return best;
}

}  // namespace oracle
