#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turanpack/graph.hpp"

namespace turanpack::packing {

/// k pairwise-disjoint vertex sets over a bound graph.
struct PackingWitness {
  std::vector<VertexSet> sets;
  friend bool operator==(const PackingWitness&, const PackingWitness&) = default;
};

enum class Mode { independent, clique };

/// The exact kernels work on 64-bit masks, so any connected component that is
/// not a clique must have at most guard_n <= 64 vertices. Clique components
/// (isolated vertices included) are handled analytically at any size.
struct SearchLimits {
  int guard_n = 64;
};
inline constexpr int kMaxGuard = 64;

/// k pairwise-disjoint independent sets of size p, or nullopt when none exist.
/// Sets are returned sorted by their minimum vertex. Throws SizeGuardError.
std::optional<PackingWitness> find_disjoint_independent_sets(const Graph& g, int k, int p,
                                                             const SearchLimits& limits = {});

/// The same search on the complement; the returned sets are cliques of g.
std::optional<PackingWitness> find_clique_packing(const Graph& g, int k, int p,
                                                  const SearchLimits& limits = {});

int independence_number(const Graph& g, const SearchLimits& limits = {});

enum class Violation { none, count, range, cardinality, disjointness, independence, clique };
std::string_view violation_name(Violation v);

struct WitnessReport {
  Violation violation = Violation::none;
  std::string detail;
  bool ok() const { return violation == Violation::none; }
};

WitnessReport verify_witness(const Graph& g, const PackingWitness& w, int k, int p, Mode mode);

struct EquitableColoring {
  std::vector<VertexSet> classes;
};

/// Proper coloring whose class sizes differ by at most one.
bool is_equitable_coloring(const Graph& g, const EquitableColoring& c);

/// Equitable coloring with `colors` classes for a graph with max degree below
/// `colors`. Throws PreconditionError if the degree bound fails and
/// SoundnessAlarm if the result does not verify.
EquitableColoring equitable_coloring(const Graph& g, int colors);

struct ExactColoringResult {
  std::optional<EquitableColoring> coloring;
  /// When no coloring exists and r is odd: two disjoint r-sets with every
  /// cross pair adjacent, if the graph has one.
  std::optional<std::pair<VertexSet, VertexSet>> krr;
};

inline constexpr int kExactColoringGuard = 40;

/// Exhaustive search for an equitable r-coloring. Throws SizeGuardError above
/// kExactColoringGuard vertices.
ExactColoringResult equitable_coloring_exact(const Graph& g, int r);

}  // namespace turanpack::packing
