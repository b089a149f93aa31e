// Equitable coloring for graphs with max degree below the color count. Edges
// are added one vertex at a time; a conflict is fixed by recoloring the vertex
// and rebalancing with procedure P.

#include <algorithm>
#include <string>
#include <vector>

#include "turanpack/errors.hpp"
#include "turanpack/packing.hpp"

namespace turanpack::packing {

namespace {

class Rebalancer {
 public:
  Rebalancer(int vertices, int colors)
      : n_(vertices),
        r_(colors),
        L_(vertices),
        F_(vertices),
        C_(colors),
        N_(static_cast<std::size_t>(vertices) * colors, 0),
        H_(static_cast<std::size_t>(colors) * colors, 0) {
    for (int v = 0; v < n_; ++v) {
      F_[v] = v % r_;
      C_[F_[v]].push_back(v);
    }
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) H(a, b) = static_cast<int>(C_[a].size());
  }

  void add_vertex_edges(int u, const std::vector<int>& later_neighbors) {
    for (int v : later_neighbors) {
      L_[u].push_back(v);
      L_[v].push_back(u);
      if (++N(u, F_[v]) == 1) --H(F_[u], F_[v]);
      if (++N(v, F_[u]) == 1) --H(F_[v], F_[u]);
    }
    if (N(u, F_[u]) != 0) {
      int y = 0;
      while (y < r_ && N(u, y) != 0) ++y;
      if (y == r_) throw SoundnessAlarm("equitable coloring: no free color for a vertex");
      const int x = F_[u];
      change_color(u, x, y);
      procedure_p(x, y, std::vector<char>(r_, 0));
    }
  }

  const std::vector<int>& colors() const { return F_; }

 private:
  int& N(int v, int c) { return N_[static_cast<std::size_t>(v) * r_ + c]; }
  int& H(int a, int b) { return H_[static_cast<std::size_t>(a) * r_ + b]; }

  void change_color(int u, int x, int y) {
    F_[u] = y;
    for (int k = 0; k < r_; ++k)
      if (N(u, k) == 0) {
        --H(x, k);
        ++H(y, k);
      }
    for (int v : L_[u]) {
      if (--N(v, x) == 0) ++H(F_[v], x);
      if (++N(v, y) == 1) --H(F_[v], y);
    }
    auto& from = C_[x];
    from.erase(std::find(from.begin(), from.end(), u));
    C_[y].push_back(u);
  }

  // Moves one witness per arc along the chain x -> next[x] -> ... -> dst.
  void move_witnesses(int x, int dst, const std::vector<int>& next) {
    while (x != dst) {
      const int y = next[x];
      if (y < 0) throw SoundnessAlarm("equitable coloring: broken witness path");
      auto it = std::find_if(C_[x].begin(), C_[x].end(), [&](int w) { return N(w, y) == 0; });
      if (it == C_[x].end()) throw SoundnessAlarm("equitable coloring: witness vanished");
      change_color(*it, x, y);
      x = y;
    }
  }

  void move_along(const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      std::vector<int> next(r_, -1);
      next[path[i]] = path[i + 1];
      move_witnesses(path[i], path[i + 1], next);
    }
  }

  // Rebalances a coloring whose classes all have equal size except v_minus
  // (one short) and v_plus (one over). Excluded classes are already settled.
  void procedure_p(int v_minus, int v_plus, std::vector<char> excluded) {
    std::vector<char> in_a(r_, 0), marked(r_, 0);
    std::vector<int> toward(r_, -1), order{v_minus};
    marked[v_minus] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int pop = order[i];
      in_a[pop] = 1;
      for (int k = 0; k < r_; ++k)
        if (H(k, pop) > 0 && !marked[k] && !excluded[k]) {
          toward[k] = pop;
          marked[k] = 1;
          order.push_back(k);
        }
    }
    if (in_a[v_plus]) {
      move_witnesses(v_plus, v_minus, toward);
      return;
    }
    int b = 0;
    for (int k = 0; k < r_; ++k) b += !in_a[k] && !excluded[k];
    auto in_b = [&](int k) { return !in_a[k] && !excluded[k]; };

    std::vector<char> terminal(r_, 0);
    int terminal_count = 0;
    for (auto w1 = order.rbegin(); w1 != order.rend(); ++w1) {
      const int W = *w1;
      // A vertex of W that can move inside A and has a solo neighbor in B.
      for (std::size_t vi = 0; vi < C_[W].size(); ++vi) {
        const int v = C_[W][vi];
        int X = -1;
        for (int U = 0; U < r_; ++U)
          if (N(v, U) == 0 && in_a[U] && U != W) X = U;
        if (X < 0) continue;
        for (int U = 0; U < r_; ++U) {
          if (N(v, U) < 1 || !in_b(U)) continue;
          auto y = std::find_if(L_[v].begin(), L_[v].end(),
                                [&](int node) { return F_[node] == U && N(node, W) == 1; });
          if (y == L_[v].end()) continue;
          const int yv = *y;
          change_color(v, W, X);
          move_witnesses(X, v_minus, toward);
          change_color(yv, U, W);
          auto sub = excluded;
          for (int k = 0; k < r_; ++k) sub[k] = sub[k] || in_a[k];
          procedure_p(U, v_plus, std::move(sub));
          return;
        }
      }
      terminal[W] = 1;
      ++terminal_count;
      if (terminal_count >= b && solo_pair_case(v_minus, v_plus, in_a, terminal, toward, excluded))
        return;
    }
    throw SoundnessAlarm("equitable coloring: procedure P found no move");
  }

  // Two vertices of an independent set grown inside the classes reachable
  // from v_plus share a solo neighbor in a terminal class.
  bool solo_pair_case(int v_minus, int v_plus, const std::vector<char>& in_a,
                      const std::vector<char>& terminal, const std::vector<int>& toward,
                      const std::vector<char>& excluded) {
    std::vector<char> in_bp(r_, 0), marked(r_, 0);
    std::vector<int> parent(r_, -1), order{v_plus};
    marked[v_plus] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int pop = order[i];
      in_bp[pop] = 1;
      for (int k = 0; k < r_; ++k)
        if (H(pop, k) > 0 && !marked[k] && !excluded[k] && !in_a[k]) {
          parent[k] = pop;
          marked[k] = 1;
          order.push_back(k);
        }
    }
    std::vector<int> scan = C_[v_plus];
    for (int k = 0; k < r_; ++k)
      if (in_bp[k]) scan.insert(scan.end(), C_[k].begin(), C_[k].end());
    std::vector<char> covered(n_, 0);
    std::vector<int> covering(n_, -1);
    for (int z : scan) {
      if (covered[z] || !in_bp[F_[z]]) continue;
      covered[z] = 1;
      for (int w : L_[z]) covered[w] = 1;
      for (int w : L_[z]) {
        if (!terminal[F_[w]] || N(z, F_[w]) != 1) continue;
        if (covering[w] < 0) {
          covering[w] = z;
          continue;
        }
        const int z1 = covering[w];
        const int Z = F_[z1];
        const int W = F_[w];
        move_witnesses(W, v_minus, toward);
        std::vector<int> path{Z};
        while (path.back() != v_plus) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        move_along(path);
        change_color(z1, Z, W);
        int w_plus = -1;
        for (int k = 0; k < r_ && w_plus < 0; ++k)
          if (N(w, k) == 0 && !in_a[k] && !excluded[k]) w_plus = k;
        if (w_plus < 0) throw SoundnessAlarm("equitable coloring: no class accepts the solo neighbor");
        change_color(w, W, w_plus);
        auto sub = excluded;
        for (int k = 0; k < r_; ++k)
          if (k != W && !in_bp[k]) sub[k] = 1;
        procedure_p(W, w_plus, std::move(sub));
        return true;
      }
    }
    return false;
  }

  int n_, r_;
  std::vector<std::vector<int>> L_;
  std::vector<int> F_;
  std::vector<std::vector<int>> C_;
  std::vector<int> N_, H_;
};

}  // namespace

EquitableColoring equitable_coloring(const Graph& g, int colors) {
  if (colors < 1) throw PreconditionError("equitable coloring needs at least one color");
  const int n = g.order();
  if (n > 0 && g.max_degree() >= colors)
    throw PreconditionError("equitable coloring requires max degree < color count (max degree " +
                            std::to_string(g.max_degree()) + ", colors " +
                            std::to_string(colors) + ")");
  // Pad with a clique so the vertex count is a multiple of the color count.
  const int pad = n % colors == 0 ? 0 : colors - n % colors;
  const int total = n + pad;
  Rebalancer engine(total, colors);
  std::vector<int> later;
  for (int u = 0; u < total; ++u) {
    later.clear();
    if (u < n) {
      const auto nb = g.neighbors(u);
      for (Vertex v = nb.next(u + 1); v >= 0; v = nb.next(v + 1)) later.push_back(v);
    } else {
      for (int v = u + 1; v < total; ++v) later.push_back(v);
    }
    engine.add_vertex_edges(u, later);
  }
  EquitableColoring out;
  out.classes.assign(colors, VertexSet(n));
  for (int v = 0; v < n; ++v) out.classes[engine.colors()[v]].insert(v);
  if (!is_equitable_coloring(g, out))
    throw SoundnessAlarm("equitable coloring failed verification");
  return out;
}

}  // namespace turanpack::packing
