#include "turanpack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "turanpack/errors.hpp"

namespace turanpack {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe < 0) throw PreconditionError("vertex set universe must be nonnegative");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_words(int universe, std::span<const std::uint64_t> words) {
  VertexSet s(universe);
  if (words.size() != s.words_.size()) throw PreconditionError("word count mismatch");
  std::copy(words.begin(), words.end(), s.words_.begin());
  if (universe % 64 != 0 && !s.words_.empty() &&
      (s.words_.back() >> (universe % 64)) != 0)
    throw PreconditionError("bits set beyond the universe");
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_)
    throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(universe_ - 1));
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::next(Vertex from) const {
  if (from < 0) from = 0;
  if (from >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(from) >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits) return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw PreconditionError("vertex sets over different universes");
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) : n_(n), stride_(words_for(n)) {
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  adj_.assign(stride_ * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

VertexSet Graph::neighbors(Vertex v) const { return VertexSet::from_words(n_, row(v)); }

int Graph::degree_into(Vertex v, const VertexSet& s) const {
  if (s.universe() != n_) throw PreconditionError("vertex set bound to a different graph");
  auto r = row(v);
  auto w = s.words();
  int d = 0;
  for (std::size_t i = 0; i < stride_; ++i) d += std::popcount(r[i] & w[i]);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

// ---- GraphBuilder ----------------------------------------------------------

GraphBuilder::GraphBuilder(int n) : g_(n) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = g_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (g_.adjacent(u, v)) return false;
  g_.row_ptr(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  g_.row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  ++g_.edges_;
  return true;
}

void GraphBuilder::add_clique(std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

Graph GraphBuilder::build() && { return std::move(g_); }

// ---- algebra ---------------------------------------------------------------

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const auto& g : gs) total += g.order();
  GraphBuilder b(total);
  int offset = 0;
  for (const auto& g : gs) {
    for (auto [u, v] : g.edges()) b.add_edge(u + offset, v + offset);
    offset += g.order();
  }
  return std::move(b).build();
}

Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  GraphBuilder b(ng + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + ng, v + ng);
  for (Vertex u = 0; u < ng; ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + ng);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw PreconditionError("vertex set bound to a graph of different order");
  const auto members = s.to_vector();
  GraphBuilder b(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

long long cross_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw PreconditionError("vertex set bound to a graph of different order");
  if (a.intersects(b)) throw PreconditionError("cross_edge_count requires disjoint sets");
  long long total = 0;
  a.for_each([&](Vertex v) { total += g.degree_into(v, b); });
  return total;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && g.degree_into(v, s) == 0; });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const int k = s.size();
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && g.degree_into(v, s) == k - 1; });
  return ok;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back(n);
    comp[root] = id;
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out[id].insert(u);
      auto r = g.row(u);
      for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          if (comp[v] == -1) {
            comp[v] = id;
            stack.push_back(v);
          }
        }
      }
    }
  }
  return out;
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  if (n >= 3)
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  else if (n == 2)
    b.add_edge(0, 1);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  return join(Graph::empty(a), Graph::empty(b));
}

}  // namespace turanpack
