#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turanpack {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Subset of {0, ..., n-1} stored as a bitset. The universe size n is part of
/// the value: sets over different universes never compare equal.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);
  // Bits at positions >= universe must be clear.
  static VertexSet from_words(int universe, std::span<const std::uint64_t> words);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const;

  // Lowest member >= from, or -1.
  Vertex next(Vertex from) const;
  Vertex first() const { return next(0); }
  std::vector<Vertex> to_vector() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const std::uint64_t> words() const { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_compatible(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with one fixed-stride
/// bitset row per vertex.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on out-of-range endpoints or self-loops.
  /// Repeated pairs (in either orientation) collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph empty(int n);
  static Graph complete(int n);

  int order() const { return n_; }
  long long size() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row_ptr(u)[v >> 6] >> (v & 63)) & 1u;
  }
  int degree(Vertex v) const;
  int max_degree() const;

  std::span<const std::uint64_t> row(Vertex v) const {
    return {row_ptr(v), stride_};
  }
  VertexSet neighbors(Vertex v) const;
  // |N(v) ∩ s| without materializing N(v).
  int degree_into(Vertex v, const VertexSet& s) const;

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;
  explicit Graph(int n);
  const std::uint64_t* row_ptr(Vertex v) const {
    return adj_.data() + static_cast<std::size_t>(v) * stride_;
  }
  std::uint64_t* row_ptr(Vertex v) {
    return adj_.data() + static_cast<std::size_t>(v) * stride_;
  }

  int n_ = 0;
  std::size_t stride_ = 0;
  long long edges_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Mutable staging area; build() freezes it into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  int order() const { return g_.n_; }
  // Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  void add_clique(std::span<const Vertex> vs);
  Graph build() &&;

 private:
  Graph g_;
};

Graph complement(const Graph& g);
// Vertices of gs[i] are offset by the orders of gs[0..i-1].
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(std::initializer_list<Graph> gs);
// g's vertices first, then h's.
Graph join(const Graph& g, const Graph& h);
// Relabels the members of s to 0..|s|-1 in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
// Requires disjoint a and b.
long long cross_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

// graph6 interchange (bit-exact with the standard format, n <= 258047).
inline constexpr int kGraph6MaxOrder = 258047;
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view bytes);

// Edge-list text: a bare integer line sets the vertex count, "u v" lines are
// edges, '#' starts a comment. Without a count line n = max endpoint + 1.
std::string to_edge_list(const Graph& g);
Graph from_edge_list_text(std::string_view text);

// graph6 if the first significant line consists only of graph6 bytes,
// edge-list text otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace turanpack
