#include "turanpack/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "turanpack/errors.hpp"

namespace turanpack::packing {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// A connected component relabeled to 0..m-1 (m <= 64).
struct Local {
  int m = 0;
  std::vector<Mask> adj;
  std::vector<Vertex> global;
  Mask all() const { return m == 64 ? ~Mask{0} : bit(m) - 1; }
};

Local localize(const Graph& g, const VertexSet& comp) {
  Local L;
  L.global = comp.to_vector();
  L.m = static_cast<int>(L.global.size());
  L.adj.assign(L.m, 0);
  for (int i = 0; i < L.m; ++i)
    for (int j = i + 1; j < L.m; ++j)
      if (g.adjacent(L.global[i], L.global[j])) {
        L.adj[i] |= bit(j);
        L.adj[j] |= bit(i);
      }
  return L;
}

// Maximum independent set via clique-cover bounded branch and bound.
class MisSolver {
 public:
  explicit MisSolver(const Local& L) : L_(L) {}

  int solve() {
    best_ = 0;
    expand(L_.all(), 0);
    return best_;
  }

 private:
  void expand(Mask cand, int size) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    int order[64], bound[64], len = 0, cover = 0;
    Mask rest = cand;
    while (rest) {
      ++cover;
      Mask q = rest;
      while (q) {
        int v = std::countr_zero(q);
        order[len] = v;
        bound[len++] = cover;
        rest &= ~bit(v);
        q &= L_.adj[v];
      }
    }
    Mask p = cand;
    for (int i = len - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      expand(p & ~L_.adj[v] & ~bit(v), size + 1);
      p &= ~bit(v);
    }
  }

  const Local& L_;
  int best_ = 0;
};

// Finds disjoint independent sets of the given (nonincreasing) sizes. Sets are
// built one at a time in increasing vertex order; equal-size sets have
// increasing minima.
class Realizer {
 public:
  Realizer(const Local& L, const std::vector<int>& sizes) : L_(L), sizes_(sizes) {
    while (!sizes_.empty() && sizes_.back() == 0) sizes_.pop_back();
    suffix_.assign(sizes_.size() + 1, 0);
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i)
      suffix_[i] = suffix_[i + 1] + sizes_[i];
  }

  std::optional<std::vector<Mask>> run() {
    sets_.assign(sizes_.size(), 0);
    if (suffix_[0] > L_.m) return std::nullopt;
    if (open_set(0, 0, -1)) return sets_;
    return std::nullopt;
  }

 private:
  bool open_set(std::size_t idx, Mask used, int floor) {
    if (idx == sizes_.size()) return true;
    if (std::popcount(L_.all() & ~used) < suffix_[idx]) return false;
    const auto key = std::make_tuple(idx, used, floor);
    if (failed_.count(key)) return false;
    if (extend(idx, used, 0, 0, floor)) return true;
    if (failed_.size() < kMemoCap) failed_.insert(key);
    return false;
  }

  bool extend(std::size_t idx, Mask used, Mask cur, int count, int after) {
    if (count == sizes_[idx]) {
      sets_[idx] = cur;
      const bool same_next = idx + 1 < sizes_.size() && sizes_[idx + 1] == sizes_[idx];
      return open_set(idx + 1, used | cur, same_next ? std::countr_zero(cur) : -1);
    }
    Mask cand = L_.all() & ~used & ~cur;
    for (Mask c = cur; c;) {
      const int v = std::countr_zero(c);
      c &= c - 1;
      cand &= ~L_.adj[v];
    }
    cand &= after >= 63 ? 0 : ~(bit(after + 1) - 1);
    if (std::popcount(cand) < sizes_[idx] - count) return false;
    // The remaining sets need fresh vertices too.
    if (std::popcount(L_.all() & ~used & ~cur) < suffix_[idx] - count) return false;
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (std::popcount(cand) + 1 < sizes_[idx] - count) return false;
      if (extend(idx, used, cur | bit(v), count + 1, v)) return true;
    }
    return false;
  }

  static constexpr std::size_t kMemoCap = 1 << 20;
  const Local& L_;
  std::vector<int> sizes_;
  std::vector<int> suffix_;
  std::vector<Mask> sets_;
  std::set<std::tuple<std::size_t, Mask, int>> failed_;
};

// One maximal size profile of a component with a realization (local masks,
// aligned with `sizes`).
struct Profile {
  std::vector<int> sizes;  // nonincreasing, positive entries only
  std::vector<std::vector<Vertex>> pieces;
};

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if ((i < a.size() ? a[i] : 0) < b[i]) return false;
  return true;
}

std::vector<int> trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Maximal profiles by descending-lex scan of all candidate size vectors.
std::vector<Profile> general_profiles(const Local& L, int k, int p) {
  const int cap = std::min(p, MisSolver(L).solve());
  std::vector<std::vector<int>> candidates;
  std::vector<int> cur(k, 0);
  auto gen = [&](auto&& self, int pos, int hi, int sum) -> void {
    if (pos == k) {
      candidates.push_back(cur);
      return;
    }
    for (int v = std::min(hi, L.m - sum); v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, v, sum + v);
    }
    cur[pos] = 0;
  };
  gen(gen, 0, cap, 0);

  std::vector<Profile> feasible;
  std::vector<std::vector<int>> infeasible;
  for (const auto& c : candidates) {
    const auto t = trimmed(c);
    if (t.empty()) continue;
    if (std::any_of(feasible.begin(), feasible.end(),
                    [&](const Profile& f) { return dominates(f.sizes, t); }))
      continue;
    if (std::any_of(infeasible.begin(), infeasible.end(),
                    [&](const auto& bad) { return dominates(t, bad); }))
      continue;
    if (auto sets = Realizer(L, t).run()) {
      Profile pr{t, {}};
      for (Mask s : *sets) {
        std::vector<Vertex> piece;
        for (; s; s &= s - 1) piece.push_back(L.global[std::countr_zero(s)]);
        pr.pieces.push_back(std::move(piece));
      }
      feasible.push_back(std::move(pr));
    } else {
      infeasible.push_back(t);
    }
  }
  return feasible;
}

struct Choice {
  int prev = -1;     // state index in the previous layer
  int profile = -1;  // -1: component contributes nothing
  std::vector<int> slots;  // sorted-slot position receiving each piece, -1 if unused
};

struct Layer {
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> states;
  std::vector<Choice> choices;

  int add(const std::vector<int>& s, Choice c) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(s);
      choices.push_back(std::move(c));
    }
    return it->second;
  }
};

void check_kp(int k, int p) {
  if (k < 1 || p < 1) throw PreconditionError("packing search requires k >= 1 and p >= 1");
}

void check_limits(const SearchLimits& limits) {
  if (limits.guard_n < 1 || limits.guard_n > kMaxGuard)
    throw PreconditionError("size guard must be in 1.." + std::to_string(kMaxGuard));
}

void guard_component(int size, const SearchLimits& limits) {
  if (size > limits.guard_n)
    throw SizeGuardError("a non-clique component has " + std::to_string(size) +
                         " vertices, above the exact-search guard of " +
                         std::to_string(limits.guard_n));
}

}  // namespace

std::optional<PackingWitness> find_disjoint_independent_sets(const Graph& g, int k, int p,
                                                             const SearchLimits& limits) {
  check_kp(k, p);
  check_limits(limits);
  const int n = g.order();
  if (static_cast<long long>(k) * p > n) return std::nullopt;

  // Clique components (isolated vertices included) give at most one vertex
  // to each set and are settled after the DP by a supply-demand condition.
  std::vector<std::vector<Profile>> profiles;
  std::vector<std::vector<Vertex>> cliques;
  for (const auto& comp : connected_components(g)) {
    if (is_clique(g, comp)) {
      cliques.push_back(comp.to_vector());
    } else {
      guard_component(comp.size(), limits);
      profiles.push_back(general_profiles(localize(g, comp), k, p));
    }
  }
  // supply[t]: vertices the cliques can place into any t sets.
  std::vector<long long> supply(k + 1, 0);
  for (const auto& c : cliques)
    for (int t = 1; t <= k; ++t) supply[t] += std::min<long long>(static_cast<long long>(c.size()), t);
  auto cliques_fill = [&](const std::vector<int>& fill) {
    long long demand = 0;
    for (int t = 1; t <= k; ++t) {
      demand += p - fill[t - 1];  // fill is ascending, so deficits descend
      if (demand > supply[t]) return false;
    }
    return true;
  };

  // DP over sorted fill vectors, each entry capped at p.
  const std::size_t layers_count = profiles.size();
  std::vector<Layer> layers(layers_count + 1);
  layers[0].add(std::vector<int>(k, 0), Choice{});
  for (std::size_t c = 0; c < layers_count; ++c) {
    auto& from = layers[c];
    auto& to = layers[c + 1];
    for (int si = 0; si < static_cast<int>(from.states.size()); ++si) {
      const auto state = from.states[si];
      to.add(state, Choice{si, -1, {}});
      for (int pi = 0; pi < static_cast<int>(profiles[c].size()); ++pi) {
        const auto& sizes = profiles[c][pi].sizes;
        const int t = static_cast<int>(sizes.size());
        std::vector<int> slots(t, -1);
        std::vector<char> taken(k, 0);
        auto assign = [&](auto&& self, int j) -> void {
          if (j == t) {
            auto next = state;
            for (int a = 0; a < t; ++a)
              if (slots[a] >= 0) next[slots[a]] = std::min(p, next[slots[a]] + sizes[a]);
            std::sort(next.begin(), next.end());
            to.add(next, Choice{si, pi, slots});
            return;
          }
          for (int s = 0; s < k; ++s) {
            if (taken[s] || state[s] == p) continue;
            // Equal fills are interchangeable; use the first free one.
            if (s > 0 && state[s] == state[s - 1] && !taken[s - 1]) continue;
            taken[s] = 1;
            slots[j] = s;
            self(self, j + 1);
            taken[s] = 0;
          }
          // A piece may also stay unused.
          slots[j] = -1;
          self(self, j + 1);
        };
        assign(assign, 0);
      }
    }
  }
  const auto& last = layers[layers_count];
  int idx = -1;
  for (int si = 0; si < static_cast<int>(last.states.size()) && idx < 0; ++si)
    if (cliques_fill(last.states[si])) idx = si;
  if (idx < 0) return std::nullopt;

  // Walk back to the per-layer choices, then replay them on labeled sets.
  std::vector<Choice> path(layers_count);
  for (std::size_t c = layers_count; c > 0; --c) {
    path[c - 1] = layers[c].choices[idx];
    idx = path[c - 1].prev;
  }
  std::vector<std::vector<Vertex>> sets(k);
  for (std::size_t c = 0; c < layers_count; ++c) {
    const auto& ch = path[c];
    if (ch.profile < 0) continue;
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sets[a].size() < sets[b].size(); });
    const auto& pr = profiles[c][ch.profile];
    for (std::size_t j = 0; j < ch.slots.size(); ++j) {
      if (ch.slots[j] < 0) continue;
      auto& target = sets[order[ch.slots[j]]];
      const int take = std::min<int>(p - static_cast<int>(target.size()),
                                     static_cast<int>(pr.pieces[j].size()));
      target.insert(target.end(), pr.pieces[j].begin(), pr.pieces[j].begin() + take);
    }
  }
  // Larger cliques first, each feeding the sets with the largest deficits.
  std::stable_sort(cliques.begin(), cliques.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& c : cliques) {
    std::vector<int> order;
    for (int i = 0; i < k; ++i)
      if (static_cast<int>(sets[i].size()) < p) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sets[a].size() < sets[b].size(); });
    const std::size_t use = std::min(order.size(), c.size());
    for (std::size_t i = 0; i < use; ++i) sets[order[i]].push_back(c[i]);
  }
  PackingWitness w;
  for (const auto& s : sets) w.sets.emplace_back(n, std::span<const Vertex>(s));
  std::sort(w.sets.begin(), w.sets.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  if (!verify_witness(g, w, k, p, Mode::independent).ok())
    throw SoundnessAlarm("packing search produced an invalid witness");
  return w;
}

std::optional<PackingWitness> find_clique_packing(const Graph& g, int k, int p,
                                                  const SearchLimits& limits) {
  return find_disjoint_independent_sets(complement(g), k, p, limits);
}

int independence_number(const Graph& g, const SearchLimits& limits) {
  check_limits(limits);
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    if (is_clique(g, comp)) {
      total += 1;
    } else {
      guard_component(comp.size(), limits);
      total += MisSolver(localize(g, comp)).solve();
    }
  }
  return total;
}

std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::count: return "count";
    case Violation::range: return "range";
    case Violation::cardinality: return "cardinality";
    case Violation::disjointness: return "disjointness";
    case Violation::independence: return "independence";
    case Violation::clique: return "clique";
  }
  return "unknown";
}

WitnessReport verify_witness(const Graph& g, const PackingWitness& w, int k, int p, Mode mode) {
  if (static_cast<int>(w.sets.size()) != k)
    return {Violation::count,
            "expected " + std::to_string(k) + " sets, got " + std::to_string(w.sets.size())};
  for (std::size_t i = 0; i < w.sets.size(); ++i)
    if (w.sets[i].universe() != g.order())
      return {Violation::range, "set " + std::to_string(i) + " is bound to another vertex range"};
  for (std::size_t i = 0; i < w.sets.size(); ++i)
    if (w.sets[i].size() != p)
      return {Violation::cardinality, "set " + std::to_string(i) + " has " +
                                          std::to_string(w.sets[i].size()) + " vertices, expected " +
                                          std::to_string(p)};
  for (std::size_t i = 0; i < w.sets.size(); ++i)
    for (std::size_t j = i + 1; j < w.sets.size(); ++j)
      if (w.sets[i].intersects(w.sets[j]))
        return {Violation::disjointness,
                "sets " + std::to_string(i) + " and " + std::to_string(j) + " overlap"};
  for (std::size_t i = 0; i < w.sets.size(); ++i) {
    if (mode == Mode::independent && !is_independent(g, w.sets[i]))
      return {Violation::independence, "set " + std::to_string(i) + " spans an edge"};
    if (mode == Mode::clique && !is_clique(g, w.sets[i]))
      return {Violation::clique, "set " + std::to_string(i) + " misses an edge"};
  }
  return {};
}

bool is_equitable_coloring(const Graph& g, const EquitableColoring& c) {
  VertexSet seen(g.order());
  int lo = g.order() + 1, hi = -1;
  for (const auto& cls : c.classes) {
    if (cls.universe() != g.order() || cls.intersects(seen) || !is_independent(g, cls))
      return false;
    seen |= cls;
    lo = std::min(lo, cls.size());
    hi = std::max(hi, cls.size());
  }
  if (seen.size() != g.order()) return false;
  return c.classes.empty() || hi - lo <= 1;
}

ExactColoringResult equitable_coloring_exact(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("equitable coloring needs at least one color");
  const int n = g.order();
  if (n > kExactColoringGuard)
    throw SizeGuardError("exact equitable coloring is limited to " +
                         std::to_string(kExactColoringGuard) + " vertices");
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  const int q = n / r, big = n % r;
  std::vector<Mask> cls(r, 0);
  std::vector<int> size(r, 0);
  int used = 0, full = 0;

  auto feasible = [&](int v) {
    int need = 0;
    for (int c = 0; c < r; ++c) need += std::max(0, q - size[c]);
    return need <= n - v;
  };
  auto search = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    if (!feasible(v)) return false;
    for (int c = 0; c < std::min(r, used + 1); ++c) {
      if (cls[c] & adj[v]) continue;
      const int cap = full < big ? q + 1 : q;
      if (size[c] + 1 > cap) continue;
      const bool opened = c == used;
      const bool fills = size[c] + 1 == q + 1;
      cls[c] |= bit(v);
      ++size[c];
      used += opened;
      full += fills;
      if (self(self, v + 1)) return true;
      cls[c] &= ~bit(v);
      --size[c];
      used -= opened;
      full -= fills;
    }
    return false;
  };

  ExactColoringResult out;
  if (search(search, 0)) {
    EquitableColoring col;
    for (int c = 0; c < r; ++c) {
      VertexSet s(n);
      for (Mask m = cls[c]; m; m &= m - 1) s.insert(std::countr_zero(m));
      col.classes.push_back(std::move(s));
    }
    out.coloring = std::move(col);
    return out;
  }
  if (r % 2 == 1 && r <= 4) {
    // A K_{r,r}: B is an r-subset of N(u), A is r common neighbors of B.
    std::vector<int> pick;
    auto choose = [&](auto&& self, Mask pool, Mask common) -> bool {
      if (static_cast<int>(pick.size()) == r) {
        if (std::popcount(common) < r) return false;
        VertexSet a(n), b(n);
        Mask c = common;
        for (int i = 0; i < r; ++i, c &= c - 1) a.insert(std::countr_zero(c));
        for (int v : pick) b.insert(v);
        if (b.first() < a.first()) std::swap(a, b);
        out.krr = std::make_pair(std::move(a), std::move(b));
        return true;
      }
      for (; pool; pool &= pool - 1) {
        const int v = std::countr_zero(pool);
        const Mask next = common & adj[v];
        if (std::popcount(next) < r) continue;
        pick.push_back(v);
        if (self(self, pool & (pool - 1), next)) return true;
        pick.pop_back();
      }
      return false;
    };
    for (int u = 0; u < n && !out.krr; ++u) choose(choose, adj[u], ~Mask{0} >> (64 - std::max(n, 1)));
  }
  return out;
}

}  // namespace turanpack::packing
