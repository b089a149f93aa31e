#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "turanpack/graph.hpp"

namespace turanpack::constructions {

enum class Family {
  turan,              // T(n, p), balanced complete p-partite
  hub_join,           // K_{k-1} v T(n-k+1, p-1)
  j_graph,            // unions of K_7 / K_8 with isolated vertices, n = 4p-1+s
  tight_clique,       // K_{k+1} u isolated, n = kp
  tight_star,         // K_{1,x} u matching u isolated, n = kp
  witness_g1,         // K_6 u isolated(4p-5)
  witness_g2,         // K_7 u isolated(4p-5)
  witness_g3,         // K_8 u isolated(4p-5)
  witness_g4,         // K_8 u S_7, p = 3 only
  witness_g5,         // K_9 u isolated(4p-5)
  star,               // K_{1,x}
  clique_isolated,    // K_a u isolated, n vertices in total
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// The graph built is either the extremal graph itself (direct) or the graph
// whose complement is extremal (complement). Constructions phrased through
// independent sets are complement-side.
enum class Framing { direct, complement };

// Only the fields a family uses are meaningful; the rest stay 0.
struct ConstructionParams {
  std::int64_t n = 0, p = 0, k = 0, q = 0, s = 0, x = 0, a = 0;
  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

struct ConstructionRef {
  Family family = Family::turan;
  ConstructionParams params;
  friend bool operator==(const ConstructionRef&, const ConstructionRef&) = default;
};

// "The extremal graph contains no k disjoint copies of K_p."
struct PatternClaim {
  int k = 0;
  int p = 0;
  friend bool operator==(const PatternClaim&, const PatternClaim&) = default;
};

struct ConstructionDescriptor {
  ConstructionRef ref;
  Framing framing = Framing::direct;
  int order = 0;
  std::int64_t expected_edges = 0;
  std::optional<PatternClaim> claim;
};

struct Construction {
  Graph graph;
  ConstructionDescriptor descriptor;
};

// Component labeling is fixed: cliques first in descending size, then stars
// and matchings, then isolated vertices.

Graph turan_graph(int n, int p);
Graph hub_join(int k, int n, int p);
Graph j_graph(int p, int s);
Graph tight_family_clique(int k, int p);
Graph tight_family_star(int k, int p, int x);
Graph star(int x);
Graph clique_with_isolated(int a, int n);
// name in {"G1", ..., "G5"}.
Graph named_witness(std::string_view name, int p);

/// Builds the graph a reference names together with its descriptor. The
/// descriptor's claim is intrinsic to the family; for clique_isolated the
/// claim is taken from params.k / params.p when both are positive.
Construction build(const ConstructionRef& ref);

/// The graph whose edge count a formula reports: the built graph for direct
/// framing, its complement otherwise.
Graph extremal_graph(const Construction& c);
std::int64_t extremal_edges(const ConstructionDescriptor& d);

}  // namespace turanpack::constructions
