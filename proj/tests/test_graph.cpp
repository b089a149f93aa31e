#include <doctest.h>

#include <random>

#include "turanpack/errors.hpp"
#include "turanpack/graph.hpp"

using namespace turanpack;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// Straight transcription of the graph6 layout: N(n) then the upper triangle
// column by column, six bits per byte, offset 63.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

}  // namespace

TEST_CASE("edge lists build simple graphs") {
  CHECK(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}).size() == 3);
  CHECK(Graph::from_edges(4, {}).size() == 0);
  const auto g = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(g.size() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), PreconditionError);
}

TEST_CASE("vertex sets") {
  VertexSet s(130, {0, 64, 129});
  CHECK(s.size() == 3);
  CHECK(s.first() == 0);
  CHECK(s.next(1) == 64);
  CHECK(s.next(65) == 129);
  CHECK(s.next(130) < 0);
  VertexSet t(130, {64, 100});
  CHECK((s & t).to_vector() == std::vector<Vertex>{64});
  CHECK((s | t).size() == 4);
  CHECK((s - t).to_vector() == std::vector<Vertex>{0, 129});
  CHECK(s.intersects(t));
  CHECK(VertexSet(130, {64}).is_subset_of(s));
  CHECK(VertexSet::full(70).size() == 70);
  CHECK_FALSE(VertexSet(5) == VertexSet(6));
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(5)) == Graph::empty(5));
  CHECK(complement(Graph::empty(4)) == Graph::complete(4));
  const auto c5 = cycle_graph(5);
  const auto cc = complement(c5);
  CHECK(cc.size() == 5);
  // The complement of C_5 is the cycle 0-2-4-1-3-0.
  CHECK(cc == Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
}

TEST_CASE("disjoint union and join") {
  const auto k3 = Graph::complete(3);
  const auto two = disjoint_union({k3, k3});
  CHECK(two.order() == 6);
  CHECK(two.size() == 6);
  CHECK_FALSE(two.adjacent(2, 3));
  const auto k7e7 = disjoint_union({Graph::complete(7), Graph::empty(7)});
  CHECK(k7e7.order() == 14);
  CHECK(k7e7.size() == 21);
  CHECK(disjoint_union({}).order() == 0);

  CHECK(join(Graph::complete(1), Graph::empty(4)).size() == 4);
  CHECK(join(Graph::complete(3), complete_bipartite(8, 8)).size() == 115);
  CHECK(join(Graph::empty(0), k3) == k3);
}

TEST_CASE("induced subgraphs and cross edges") {
  CHECK(induced_subgraph(Graph::complete(5), VertexSet(5, {0, 1, 2})) == Graph::complete(3));
  CHECK(induced_subgraph(cycle_graph(5), VertexSet(5, {0, 2})) == Graph::empty(2));
  const auto k7e7 = disjoint_union({Graph::complete(7), Graph::empty(7)});
  CHECK(induced_subgraph(k7e7, VertexSet(14, {0, 1, 2, 3, 4, 5, 6})) == Graph::complete(7));

  CHECK(cross_edge_count(Graph::complete(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);
  CHECK(cross_edge_count(Graph::empty(6), VertexSet(6, {0, 1}), VertexSet(6, {2, 3})) == 0);
  CHECK(cross_edge_count(complete_bipartite(3, 2), VertexSet(5, {0, 1, 2}), VertexSet(5, {3, 4})) == 6);
}

TEST_CASE("components, cliques and independence") {
  const auto g = disjoint_union({Graph::complete(4), path_graph(3), Graph::empty(2)});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].size() == 4);
  CHECK(is_clique(g, comps[0]));
  CHECK_FALSE(is_clique(g, comps[1]));
  CHECK(is_independent(g, VertexSet(9, {0, 4, 6, 7, 8})));
  CHECK_FALSE(is_independent(g, VertexSet(9, {4, 5})));
  CHECK(g.max_degree() == 3);
  CHECK(g.degree_into(5, VertexSet(9, {4, 6, 0})) == 2);
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(Graph::empty(0)) == "?");
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(from_graph6("Bw") == Graph::complete(3));
  CHECK(from_graph6("?").order() == 0);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  CHECK_THROWS_AS(from_graph6("Bw!"), ParseError);
}

TEST_CASE("graph6 round trip and reference encoder") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const int n = static_cast<int>(rng() % 33);
    const auto g = random_graph(rng, n, 0.1 + 0.8 * (t % 7) / 7.0);
    const auto text = to_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(from_graph6(text) == g);
  }
  const auto big = random_graph(rng, 70, 0.2);
  CHECK(to_graph6(big) == reference_graph6(big));
  CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("edge-list text and autodetection") {
  const auto g = from_edge_list_text("# triangle plus isolated\n4\n0 1\n1 2\n2 0\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(from_edge_list_text("0 5\n").order() == 6);
  CHECK(from_edge_list_text(to_edge_list(g)) == g);
  CHECK(parse_graph_auto("Bw\n") == Graph::complete(3));
  CHECK(parse_graph_auto("3\n0 1\n") == Graph::from_edges(3, {{0, 1}}));
  CHECK_THROWS_AS(from_edge_list_text("0 x\n"), ParseError);
}
