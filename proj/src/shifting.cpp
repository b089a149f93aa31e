#include "turanpack/shifting.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "turanpack/errors.hpp"

namespace turanpack::shifting {

namespace {

int target_size(int cls, int p) { return cls == kDestination ? p - 1 : p; }

void compute_access(AuxDigraph& aux) {
  aux.accessible.fill(false);
  aux.next_hop.fill(-1);
  aux.accessible[kDestination] = true;
  std::vector<int> queue{kDestination};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int t = queue[q];
    for (int i = 0; i < kClasses; ++i)
      if (!aux.accessible[i] && aux.has_arc(i, t)) {
        aux.accessible[i] = true;
        aux.next_hop[i] = t;
        queue.push_back(i);
      }
  }
}

PartitionState apply_steps(const PartitionState& st, const std::vector<Relocation>& steps) {
  PartitionState out = st;
  const Graph& g = *st.graph;
  for (const auto& r : steps) {
    if (r.from < 0 || r.from >= kClasses || r.to < 0 || r.to >= kClasses || r.from == r.to)
      throw PreconditionError("shift step has a malformed class pair");
    if (!out.classes[r.from].contains(r.v))
      throw PreconditionError("vertex " + std::to_string(r.v) + " is not in class V_" +
                              std::to_string(r.from + 1));
    if (r.to != kLeftover && g.degree_into(r.v, out.classes[r.to]) != 0)
      throw PreconditionError("vertex " + std::to_string(r.v) + " is not movable to V_" +
                              std::to_string(r.to + 1));
    out.classes[r.from].erase(r.v);
    out.classes[r.to].insert(r.v);
  }
  return out;
}

std::vector<Relocation> path_steps(const AuxDigraph& aux, const std::vector<int>& path) {
  std::vector<Relocation> steps;
  for (std::size_t l = 0; l + 1 < path.size(); ++l)
    steps.push_back({aux.witness[path[l]][path[l + 1]], path[l], path[l + 1]});
  return steps;
}

bool holds_four_p_sets(const PartitionState& st) {
  for (int c = 1; c < kClasses; ++c)
    if (st.classes[c].size() < st.p) return false;
  return true;
}

packing::PackingWitness witness_from(const PartitionState& st) {
  const int n = st.graph->order();
  packing::PackingWitness w;
  for (int c = 1; c < kClasses; ++c) {
    auto members = st.classes[c].to_vector();
    members.resize(st.p);
    w.sets.emplace_back(n, std::span<const Vertex>(members));
  }
  std::sort(w.sets.begin(), w.sets.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return w;
}

void check_form(int n, int p) {
  const int s = n - 4 * p + 1;
  if (p < 1 || s < 1 || s > 3 * p - 1)
    throw PreconditionError("vertex count " + std::to_string(n) +
                            " is not 4p - 1 + s with 1 <= s <= 3p - 1 for p = " +
                            std::to_string(p));
}

std::optional<std::array<VertexSet, kClasses>> seed_greedy(const Graph& g, int p) {
  const int n = g.order();
  std::array<VertexSet, kClasses> classes;
  VertexSet available = VertexSet::full(n);
  for (int c = 1; c < kClasses; ++c) {
    VertexSet chosen(n), cand = available;
    while (chosen.size() < target_size(c, p)) {
      Vertex best = -1;
      int best_deg = 0;
      cand.for_each([&](Vertex v) {
        const int d = g.degree_into(v, available);
        if (best < 0 || d < best_deg) {
          best = v;
          best_deg = d;
        }
      });
      if (best < 0) return std::nullopt;
      chosen.insert(best);
      cand.erase(best);
      cand -= g.neighbors(best);
    }
    available -= chosen;
    classes[c] = std::move(chosen);
  }
  classes[kLeftover] = std::move(available);
  return classes;
}

std::optional<std::array<VertexSet, kClasses>> seed_coloring(const Graph& g, int p) {
  const int n = g.order();
  const auto coloring = packing::equitable_coloring(g, g.max_degree() + 1);
  std::array<VertexSet, kClasses> classes;
  VertexSet available = VertexSet::full(n);
  for (int c = 1; c < kClasses; ++c) {
    VertexSet best(n);
    for (const auto& cls : coloring.classes) {
      const auto part = cls & available;
      if (part.size() > best.size()) best = part;
    }
    VertexSet cand = available - best;
    best.for_each([&](Vertex v) { cand -= g.neighbors(v); });
    while (best.size() < target_size(c, p)) {
      const Vertex v = cand.first();
      if (v < 0) return std::nullopt;
      best.insert(v);
      cand.erase(v);
      cand -= g.neighbors(v);
    }
    auto members = best.to_vector();
    members.resize(target_size(c, p));
    VertexSet chosen(n, std::span<const Vertex>(members));
    available -= chosen;
    classes[c] = std::move(chosen);
  }
  classes[kLeftover] = std::move(available);
  return classes;
}

}  // namespace

bool PartitionState::is_valid() const {
  if (!graph) return false;
  const int n = graph->order();
  VertexSet seen(n);
  for (int c = 0; c < kClasses; ++c) {
    if (classes[c].universe() != n || classes[c].intersects(seen)) return false;
    seen |= classes[c];
    if (c != kLeftover && !is_independent(*graph, classes[c])) return false;
  }
  return seen.size() == n;
}

bool PartitionState::is_canonical() const {
  if (!is_valid()) return false;
  for (int c = 1; c < kClasses; ++c)
    if (classes[c].size() != target_size(c, p)) return false;
  return true;
}

std::vector<int> PartitionState::labels() const {
  std::vector<int> out(graph ? graph->order() : 0, -1);
  for (int c = 0; c < kClasses; ++c) classes[c].for_each([&](Vertex v) { out[v] = c; });
  return out;
}

int PartitionState::class_of(Vertex v) const {
  for (int c = 0; c < kClasses; ++c)
    if (classes[c].contains(v)) return c;
  return -1;
}

int AuxDigraph::inaccessible_count() const {
  return static_cast<int>(std::count(accessible.begin(), accessible.end(), false));
}

std::vector<int> AuxDigraph::path_to_destination(int from) const {
  if (from < 0 || from >= kClasses || !accessible[from]) return {};
  std::vector<int> path{from};
  while (path.back() != kDestination) path.push_back(next_hop[path.back()]);
  return path;
}

AuxDigraph AuxDigraph::without_arc(int i, int j) const {
  AuxDigraph out = *this;
  out.witness[i][j] = -1;
  compute_access(out);
  return out;
}

std::optional<PartitionState> init_partition(std::shared_ptr<const Graph> g, int p) {
  if (!g) throw PreconditionError("init_partition needs a graph");
  check_form(g->order(), p);
  auto seeded = seed_greedy(*g, p);
  if (!seeded) seeded = seed_coloring(*g, p);
  if (!seeded) return std::nullopt;
  PartitionState st{std::move(g), p, std::move(*seeded)};
  if (!st.is_canonical()) throw SoundnessAlarm("seeded partition is not canonical");
  return st;
}

AuxDigraph build_aux_digraph(const PartitionState& st) {
  const Graph& g = *st.graph;
  AuxDigraph aux;
  for (int i = 0; i < kClasses; ++i)
    for (int j = 0; j < kClasses; ++j) {
      aux.witness[i][j] = -1;
      if (i == j) continue;
      for (Vertex x = st.classes[i].first(); x >= 0; x = st.classes[i].next(x + 1))
        if (g.degree_into(x, st.classes[j]) == 0) {
          aux.witness[i][j] = x;
          break;
        }
    }
  compute_access(aux);
  return aux;
}

std::optional<Vertex> solo_neighbor(const PartitionState& st, Vertex v, int j) {
  const auto common = st.graph->neighbors(v) & st.classes[j];
  if (common.size() != 1) return std::nullopt;
  return common.first();
}

PartitionState apply_shift(const PartitionState& st, std::span<const int> path,
                           std::span<const Vertex> movers) {
  if (path.size() < 2 || movers.size() + 1 != path.size())
    throw PreconditionError("shift path needs at least two classes and one mover per arc");
  std::vector<Relocation> steps;
  for (std::size_t l = 0; l < movers.size(); ++l) steps.push_back({movers[l], path[l], path[l + 1]});
  auto out = apply_steps(st, steps);
  if (!out.is_valid()) throw SoundnessAlarm("shift produced an invalid partition");
  return out;
}

bool check_inaccessible_neighbors(const PartitionState& st, const AuxDigraph& aux) {
  const Graph& g = *st.graph;
  for (int b = 0; b < kClasses; ++b) {
    if (aux.accessible[b]) continue;
    for (int a = 0; a < kClasses; ++a) {
      if (!aux.accessible[a]) continue;
      bool ok = true;
      st.classes[b].for_each([&](Vertex v) { ok = ok && g.degree_into(v, st.classes[a]) > 0; });
      if (!ok) return false;
    }
  }
  return true;
}

std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::direct_shift: return "direct-shift";
    case MoveKind::solo_shift: return "solo-shift";
    case MoveKind::shared_solo: return "shared-solo";
    case MoveKind::reroot: return "reroot";
    case MoveKind::solo_swap: return "solo-swap";
  }
  return "unknown";
}

std::vector<Move> propose_moves(const PartitionState& st, const AuxDigraph& aux) {
  const Graph& g = *st.graph;
  std::vector<Move> finishing, neutral;
  const auto leftover = st.classes[kLeftover].to_vector();

  if (aux.accessible[kLeftover]) {
    Move m{MoveKind::direct_shift, path_steps(aux, aux.path_to_destination(kLeftover))};
    m.finishing = true;
    finishing.push_back(std::move(m));
  }

  // Two nonadjacent leftover vertices whose only neighbor in an accessible
  // class is the same vertex v.
  for (int i = 1; i < kClasses; ++i) {
    if (!aux.accessible[i]) continue;
    for (std::size_t a = 0; a < leftover.size(); ++a) {
      const auto va = solo_neighbor(st, leftover[a], i);
      if (!va) continue;
      for (std::size_t b = a + 1; b < leftover.size(); ++b) {
        const Vertex x1 = leftover[a], x2 = leftover[b];
        if (g.adjacent(x1, x2) || solo_neighbor(st, x2, i) != va) continue;
        const Vertex v = *va;
        Move m{MoveKind::shared_solo, {}};
        m.finishing = true;
        m.x1 = x1;
        m.x2 = x2;
        m.v = v;
        m.cls = i;
        if (i == kDestination) {
          m.steps = {{v, i, kLeftover}, {x1, kLeftover, i}, {x2, kLeftover, i}};
        } else {
          const auto path = aux.path_to_destination(i);
          m.steps = path_steps(aux, path);
          if (g.degree_into(v, st.classes[path[1]]) == 0) {
            m.steps.front().v = v;
            m.steps.push_back({x1, kLeftover, i});
          } else {
            m.steps.push_back({v, i, kLeftover});
            m.steps.push_back({x1, kLeftover, i});
            m.steps.push_back({x2, kLeftover, i});
          }
        }
        finishing.push_back(std::move(m));
      }
    }
  }

  // A leftover vertex takes the place of its solo neighbor v, which moves on
  // to another class and, if needed, along a path to the destination.
  for (Vertex x : leftover) {
    for (int i = 1; i < kClasses; ++i) {
      const auto v = solo_neighbor(st, x, i);
      if (!v) continue;
      for (int j = 1; j < kClasses; ++j) {
        if (j == i || g.degree_into(*v, st.classes[j]) != 0) continue;
        std::vector<Relocation> steps{{*v, i, j}, {x, kLeftover, i}};
        if (j != kDestination) {
          const auto mid = apply_steps(st, steps);
          const auto aux2 = build_aux_digraph(mid);
          const auto path = aux2.path_to_destination(j);
          if (path.empty()) continue;
          const auto more = path_steps(aux2, path);
          steps.insert(steps.end(), more.begin(), more.end());
        }
        Move m{MoveKind::solo_shift, std::move(steps)};
        m.finishing = true;
        m.x1 = x;
        m.v = *v;
        m.cls = i;
        finishing.push_back(std::move(m));
        break;
      }
    }
  }

  for (int j = 1; j < kDestination; ++j) {
    if (!aux.has_arc(j, kDestination)) continue;
    Move m{MoveKind::reroot, {{aux.witness[j][kDestination], j, kDestination}}};
    m.reroot_class = j;
    m.cls = j;
    neutral.push_back(std::move(m));
  }
  for (Vertex x : leftover)
    for (int i = 1; i < kClasses; ++i)
      if (const auto v = solo_neighbor(st, x, i)) {
        Move m{MoveKind::solo_swap, {{*v, i, kLeftover}, {x, kLeftover, i}}};
        m.x1 = x;
        m.v = *v;
        m.cls = i;
        neutral.push_back(std::move(m));
      }

  finishing.insert(finishing.end(), neutral.begin(), neutral.end());
  return finishing;
}

PartitionState apply_move(const PartitionState& st, const Move& m) {
  auto out = apply_steps(st, m.steps);
  if (m.reroot_class >= 0) std::swap(out.classes[m.reroot_class], out.classes[kDestination]);
  if (!out.is_valid()) throw SoundnessAlarm("move produced an invalid partition");
  if (m.finishing != holds_four_p_sets(out))
    throw SoundnessAlarm(std::string("move ") + std::string(move_kind_name(m.kind)) +
                         " did not have its declared effect");
  return out;
}

std::optional<StructureCertificate> certify_k7_structure(const Graph& g, int p) {
  const int n = g.order();
  const int s = n - 4 * p + 1;
  if (p < 1 || s < 1 || s > 3 * p - 1 || s % 3 != 0) return std::nullopt;
  StructureCertificate c;
  c.s = s;
  c.isolated = VertexSet(n);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      c.isolated |= comp;
    } else if (comp.size() == 7 && is_clique(g, comp)) {
      c.seven_cliques.push_back(comp);
    } else {
      return std::nullopt;
    }
  }
  if (static_cast<int>(c.seven_cliques.size()) * 3 != s) return std::nullopt;
  c.edges = g.size();
  c.max_degree = g.max_degree();
  if (!verify_certificate(g, p, c)) throw SoundnessAlarm("K_7 certificate failed verification");
  return c;
}

bool verify_certificate(const Graph& g, int p, const StructureCertificate& c) {
  const int n = g.order();
  if (c.s != n - 4 * p + 1 || c.s < 1 || c.s % 3 != 0) return false;
  if (static_cast<int>(c.seven_cliques.size()) * 3 != c.s) return false;
  if (c.edges != g.size() || c.edges != 7LL * c.s) return false;
  if (c.max_degree != g.max_degree() || c.max_degree > 6) return false;
  VertexSet seen(n);
  for (const auto& k7 : c.seven_cliques) {
    if (k7.universe() != n || k7.size() != 7 || !is_clique(g, k7) || k7.intersects(seen))
      return false;
    bool closed = true;
    k7.for_each([&](Vertex v) { closed = closed && g.degree(v) == 6; });
    if (!closed) return false;
    seen |= k7;
  }
  if (c.isolated.universe() != n || c.isolated.intersects(seen)) return false;
  bool isolated = true;
  c.isolated.for_each([&](Vertex v) { isolated = isolated && g.degree(v) == 0; });
  seen |= c.isolated;
  return isolated && seen.size() == n;
}

ResolveResult resolve(const Graph& g, int p, const ResolveOptions& opts) {
  const int n = g.order();
  const int s = n - 4 * p + 1;
  std::vector<std::string> failed;
  if (p < 3) failed.push_back("p >= 3");
  if (s < 1 || s > 3 * p - 1) failed.push_back("n = 4p - 1 + s with 1 <= s <= 3p - 1");
  if (failed.empty() && g.size() > 7LL * s) failed.push_back("e(G) <= 7s");
  if (g.max_degree() > 6) failed.push_back("max degree <= 6");
  if (!failed.empty()) {
    std::string msg = "resolve preconditions violated:";
    for (const auto& f : failed) msg += " [" + f + "]";
    msg += " (n = " + std::to_string(n) + ", p = " + std::to_string(p) +
           ", e = " + std::to_string(g.size()) + ", max degree = " +
           std::to_string(g.max_degree()) + ")";
    throw PreconditionError(msg);
  }

  ResolveResult result{packing::PackingWitness{}, {}};
  auto& stats = result.stats;
  auto finish = [&](const PartitionState& st) {
    auto w = witness_from(st);
    if (!packing::verify_witness(g, w, 4, p, packing::Mode::independent).ok())
      throw SoundnessAlarm("shifting produced an invalid witness");
    result.outcome = std::move(w);
    return result;
  };

  auto shared = std::make_shared<const Graph>(g);
  auto seeded = init_partition(shared, p);
  stats.seeded = seeded.has_value();
  if (seeded) {
    const int budget = opts.budget >= 0 ? opts.budget : 10 * n;
    PartitionState st = std::move(*seeded);
    std::set<std::vector<int>> visited{st.labels()};
    while (stats.rebuilds < budget) {
      const auto aux = build_aux_digraph(st);
      ++stats.rebuilds;
      stats.inaccessible_trajectory.push_back(aux.inaccessible_count());
      if (!check_inaccessible_neighbors(st, aux)) throw SoundnessAlarm("accessible split is inconsistent");
      const auto moves = propose_moves(st, aux);
      const auto fin = std::find_if(moves.begin(), moves.end(), [](const Move& m) { return m.finishing; });
      if (fin != moves.end()) {
        stats.moves.push_back(fin->kind);
        return finish(apply_move(st, *fin));
      }
      // Neutral move leading to the fewest inaccessible classes.
      const Move* best = nullptr;
      std::optional<PartitionState> best_state;
      int best_b = kClasses + 1;
      for (const auto& m : moves) {
        auto next = apply_move(st, m);
        if (visited.count(next.labels())) continue;
        const int b = build_aux_digraph(next).inaccessible_count();
        if (b < best_b) {
          best_b = b;
          best = &m;
          best_state = std::move(next);
        }
      }
      if (!best) break;
      stats.moves.push_back(best->kind);
      visited.insert(best_state->labels());
      st = std::move(*best_state);
    }
  }

  stats.fallback = true;
  if (auto w = packing::find_disjoint_independent_sets(g, 4, p, opts.limits)) {
    result.outcome = std::move(*w);
    return result;
  }
  if (auto cert = certify_k7_structure(g, p)) {
    result.outcome = std::move(*cert);
    return result;
  }
  throw SoundnessAlarm("no four disjoint independent " + std::to_string(p) +
                       "-sets and no K_7-union structure: the dichotomy failed");
}

}  // namespace turanpack::shifting
