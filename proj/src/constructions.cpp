#include "turanpack/constructions.hpp"

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "turanpack/errors.hpp"
#include "turanpack/formulas.hpp"

namespace turanpack::constructions {

namespace {

// 32768 vertices is 128 MiB of adjacency rows.
constexpr std::int64_t kMaxBuildOrder = 1 << 15;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

int to_order(std::int64_t v, const char* what) {
  if (v < 0 || v > kMaxBuildOrder)
    throw PreconditionError(std::string(what) + " " + std::to_string(v) +
                            " outside the buildable range 0.." + std::to_string(kMaxBuildOrder));
  return static_cast<int>(v);
}

// Cliques (in the given order) followed by isolated vertices up to n.
Graph cliques_then_isolated(const std::vector<int>& clique_sizes, int n) {
  GraphBuilder b(n);
  Vertex next = 0;
  for (int size : clique_sizes) {
    std::vector<Vertex> members(size);
    std::iota(members.begin(), members.end(), next);
    b.add_clique(members);
    next += size;
  }
  return std::move(b).build();
}

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 12> kFamilyNames{{
    {Family::turan, "turan"},
    {Family::hub_join, "hub-join"},
    {Family::j_graph, "J"},
    {Family::tight_clique, "tight-A"},
    {Family::tight_star, "tight-B"},
    {Family::witness_g1, "G1"},
    {Family::witness_g2, "G2"},
    {Family::witness_g3, "G3"},
    {Family::witness_g4, "G4"},
    {Family::witness_g5, "G5"},
    {Family::star, "star"},
    {Family::clique_isolated, "clique-isolated"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [family, n] : kFamilyNames)
    if (n == name) return family;
  return std::nullopt;
}

Graph turan_graph(int n, int p) {
  require(p >= 1, "turan_graph requires p >= 1");
  require(n >= 0, "vertex count must be nonnegative");
  // Round-robin parts: vertex v belongs to part v mod p.
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u % p != v % p) b.add_edge(u, v);
  return std::move(b).build();
}

Graph hub_join(int k, int n, int p) {
  require(k >= 1 && p >= 2, "hub_join requires k >= 1 and p >= 2");
  require(n >= k - 1, "hub_join requires n >= k - 1");
  return join(Graph::complete(k - 1), turan_graph(n - k + 1, p - 1));
}

Graph j_graph(int p, int s) {
  require(p >= 3, "J requires p >= 3");
  require(s >= 1 && s <= 3 * p - 1, "J requires 1 <= s <= 3p - 1");
  const int n = 4 * p - 1 + s;
  std::vector<int> cliques;
  int isolated = 0;
  switch (s % 3) {
    case 0:
      cliques.assign(s / 3, 7);
      isolated = 4 * p - 1 - 4 * s / 3;
      break;
    case 1:
      if (s < 4) throw PreconditionError("J undefined here: s = " + std::to_string(s) +
                                         " leaves a negative K_7 count");
      cliques.assign(1, 8);
      cliques.insert(cliques.end(), (s - 4) / 3, 7);
      isolated = 4 * p - (4 * s - 1) / 3;
      break;
    default:
      if (s < 8) throw PreconditionError("J undefined here: s = " + std::to_string(s) +
                                         " leaves a negative K_7 count");
      cliques.assign(2, 8);
      cliques.insert(cliques.end(), (s - 8) / 3, 7);
      isolated = 4 * p - (4 * s - 5) / 3;
      break;
  }
  if (isolated < 0) throw PreconditionError("J undefined here: negative isolated part");
  return cliques_then_isolated(cliques, n);
}

Graph tight_family_clique(int k, int p) {
  require(k >= 1 && p >= 2, "tight clique family requires k >= 1 and p >= 2");
  require(k <= 2 * p - 2, "tight clique family requires k <= 2p - 2");
  return clique_with_isolated(k + 1, k * p);
}

Graph tight_family_star(int k, int p, int x) {
  require(p >= 3 && k >= 1, "tight star family requires p >= 3 and k >= 1");
  require(k >= 2 * p - 2, "tight star family requires k >= 2p - 2");
  const int n = k * p;
  require(x >= n - 2 * p + 3 && x <= n - p + 1,
          "tight star family requires kp - 2p + 3 <= x <= kp - p + 1");
  const int matching = n - p - x + 1;
  GraphBuilder b(n);
  for (Vertex leaf = 1; leaf <= x; ++leaf) b.add_edge(0, leaf);
  for (int i = 0; i < matching; ++i) b.add_edge(x + 1 + 2 * i, x + 2 + 2 * i);
  return std::move(b).build();
}

Graph star(int x) {
  require(x >= 0, "star requires x >= 0");
  GraphBuilder b(x + 1);
  for (Vertex leaf = 1; leaf <= x; ++leaf) b.add_edge(0, leaf);
  return std::move(b).build();
}

Graph clique_with_isolated(int a, int n) {
  require(a >= 0 && a <= n, "clique_with_isolated requires 0 <= a <= n");
  return cliques_then_isolated({a}, n);
}

Graph named_witness(std::string_view name, int p) {
  require(p >= 3, "witness graphs require p >= 3");
  const int isolated = 4 * p - 5;
  if (name == "G1") return clique_with_isolated(6, 6 + isolated);
  if (name == "G2") return clique_with_isolated(7, 7 + isolated);
  if (name == "G3") return clique_with_isolated(8, 8 + isolated);
  if (name == "G5") return clique_with_isolated(9, 9 + isolated);
  if (name == "G4") {
    require(p == 3, "G4 = K_8 u S_7 is defined for p = 3 only");
    return disjoint_union({Graph::complete(8), star(7)});
  }
  throw PreconditionError("unknown witness graph \"" + std::string(name) + "\"");
}

Construction build(const ConstructionRef& ref) {
  const auto& pr = ref.params;
  ConstructionDescriptor d{ref, Framing::direct, 0, 0, std::nullopt};
  Graph g;
  auto witness = [&](const char* name, std::int64_t edges) {
    g = named_witness(name, to_order(pr.p, "p"));
    d.framing = Framing::complement;
    d.expected_edges = edges;
    d.claim = PatternClaim{4, static_cast<int>(pr.p)};
  };
  switch (ref.family) {
    case Family::turan:
      g = turan_graph(to_order(pr.n, "n"), to_order(pr.p, "p"));
      d.expected_edges = formulas::turan_edges(pr.n, pr.p);
      d.claim = PatternClaim{1, static_cast<int>(pr.p) + 1};
      break;
    case Family::hub_join:
      g = hub_join(to_order(pr.k, "k"), to_order(pr.n, "n"), to_order(pr.p, "p"));
      d.expected_edges = formulas::hub_expression(pr.n, pr.k, pr.p);
      d.claim = PatternClaim{static_cast<int>(pr.k), static_cast<int>(pr.p)};
      break;
    case Family::j_graph:
      g = j_graph(to_order(pr.p, "p"), to_order(pr.s, "s"));
      d.framing = Framing::complement;
      d.expected_edges = 7 * pr.s;
      d.claim = PatternClaim{4, static_cast<int>(pr.p)};
      break;
    case Family::tight_clique:
      g = tight_family_clique(to_order(pr.k, "k"), to_order(pr.p, "p"));
      d.framing = Framing::complement;
      d.expected_edges = formulas::choose2(pr.k + 1);
      d.claim = PatternClaim{static_cast<int>(pr.k), static_cast<int>(pr.p)};
      break;
    case Family::tight_star:
      g = tight_family_star(to_order(pr.k, "k"), to_order(pr.p, "p"), to_order(pr.x, "x"));
      d.framing = Framing::complement;
      d.expected_edges = pr.k * pr.p - pr.p + 1;
      d.claim = PatternClaim{static_cast<int>(pr.k), static_cast<int>(pr.p)};
      break;
    case Family::witness_g1: witness("G1", 15); break;
    case Family::witness_g2: witness("G2", 21); break;
    case Family::witness_g3: witness("G3", 28); break;
    case Family::witness_g4: witness("G4", 35); break;
    case Family::witness_g5: witness("G5", 36); break;
    case Family::star:
      g = star(to_order(pr.x, "x"));
      d.expected_edges = pr.x;
      break;
    case Family::clique_isolated:
      g = clique_with_isolated(to_order(pr.a, "a"), to_order(pr.n, "n"));
      d.expected_edges = formulas::choose2(pr.a);
      if (pr.k > 0 && pr.p > 0)
        d.claim = PatternClaim{static_cast<int>(pr.k), static_cast<int>(pr.p)};
      break;
  }
  d.order = g.order();
  return Construction{std::move(g), d};
}

Graph extremal_graph(const Construction& c) {
  return c.descriptor.framing == Framing::direct ? c.graph : complement(c.graph);
}

std::int64_t extremal_edges(const ConstructionDescriptor& d) {
  return d.framing == Framing::direct ? d.expected_edges
                                      : formulas::choose2(d.order) - d.expected_edges;
}

}  // namespace turanpack::constructions
