#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "turanpack/graph.hpp"
#include "turanpack/packing.hpp"

namespace turanpack::shifting {

// Class indices are 0-based: 0 is the leftover class V_1, 1..3 are the
// independent p-sets V_2..V_4 and 4 is the destination V_5.
inline constexpr int kClasses = 5;
inline constexpr int kLeftover = 0;
inline constexpr int kDestination = 4;

struct PartitionState {
  std::shared_ptr<const Graph> graph;
  int p = 0;
  std::array<VertexSet, kClasses> classes;

  /// Classes partition V(G) and V_2..V_5 are independent.
  bool is_valid() const;
  /// Valid with sizes (s, p, p, p, p-1).
  bool is_canonical() const;
  /// Class index of every vertex.
  std::vector<int> labels() const;
  int class_of(Vertex v) const;
};

struct AuxDigraph {
  /// witness[i][j]: lowest x in V_i with no neighbor in V_j, or -1 (no arc).
  std::array<std::array<Vertex, kClasses>, kClasses> witness{};
  std::array<bool, kClasses> accessible{};
  /// First class on a shortest path to the destination, -1 if none.
  std::array<int, kClasses> next_hop{};

  bool has_arc(int i, int j) const { return witness[i][j] >= 0; }
  int inaccessible_count() const;
  /// Class sequence from `from` to the destination; empty if inaccessible.
  std::vector<int> path_to_destination(int from) const;
  /// Copy with the arc removed and accessibility recomputed.
  AuxDigraph without_arc(int i, int j) const;
};

std::optional<PartitionState> init_partition(std::shared_ptr<const Graph> g, int p);
AuxDigraph build_aux_digraph(const PartitionState& st);

/// The unique neighbor of v inside class j, if v has exactly one there.
std::optional<Vertex> solo_neighbor(const PartitionState& st, Vertex v, int j);

/// Moves movers[l] from path[l] to path[l+1], one after another. Each mover
/// must sit in its class and, unless the target is V_1, have no neighbor in
/// the target at the moment it moves. Throws PreconditionError otherwise.
PartitionState apply_shift(const PartitionState& st, std::span<const int> path,
                           std::span<const Vertex> movers);

/// Every vertex of an inaccessible class has a neighbor in every accessible
/// class. Checked against the graph, so a corrupted digraph is caught.
bool check_inaccessible_neighbors(const PartitionState& st, const AuxDigraph& aux);

enum class MoveKind {
  direct_shift,  // V_1 accessible: shift along the path
  solo_shift,    // x in V_1 replaces its solo neighbor v, which leaves along a path
  shared_solo,   // nonadjacent x1, x2 in V_1 share the solo neighbor v
  reroot,        // a vertex enters V_5 and its old class becomes the destination
  solo_swap,     // x in V_1 and its solo neighbor trade places
};
std::string_view move_kind_name(MoveKind k);

struct Relocation {
  Vertex v = -1;
  int from = -1;
  int to = -1;
};

struct Move {
  MoveKind kind = MoveKind::direct_shift;
  std::vector<Relocation> steps;
  /// After the steps, swap the labels of this class and the destination.
  int reroot_class = -1;
  /// True when the result holds four independent p-sets.
  bool finishing = false;
  Vertex x1 = -1, x2 = -1, v = -1;
  int cls = -1;
};

/// Finishing moves first (direct shift, shared solo neighbors, solo shifts),
/// then neutral ones; ties by lowest class then lowest vertex.
std::vector<Move> propose_moves(const PartitionState& st, const AuxDigraph& aux);
PartitionState apply_move(const PartitionState& st, const Move& m);

struct StructureCertificate {
  std::vector<VertexSet> seven_cliques;
  VertexSet isolated;
  int s = 0;
  long long edges = 0;
  int max_degree = 0;
};

/// Succeeds iff g is (s/3)K_7 plus isolated vertices with n = 4p - 1 + s.
std::optional<StructureCertificate> certify_k7_structure(const Graph& g, int p);
bool verify_certificate(const Graph& g, int p, const StructureCertificate& c);

struct ResolveOptions {
  /// Digraph rebuilds before the exact fallback; negative means 10 n.
  int budget = -1;
  packing::SearchLimits limits;
};

struct ResolveStats {
  int rebuilds = 0;
  std::vector<int> inaccessible_trajectory;
  std::vector<MoveKind> moves;
  bool seeded = false;
  bool fallback = false;
};

struct ResolveResult {
  std::variant<packing::PackingWitness, StructureCertificate> outcome;
  ResolveStats stats;
  bool is_witness() const { return outcome.index() == 0; }
};

/// Four disjoint independent p-sets, or the K_7-union certificate. Requires
/// p >= 3, n = 4p - 1 + s with 1 <= s <= 3p - 1, e(g) <= 7s and max degree
/// <= 6. Raises SoundnessAlarm if neither outcome materializes.
ResolveResult resolve(const Graph& g, int p, const ResolveOptions& opts = {});

}  // namespace turanpack::shifting
