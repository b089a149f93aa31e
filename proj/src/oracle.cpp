#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "turanpack/errors.hpp"
#include "turanpack/formulas.hpp"
#include "turanpack/harness.hpp"

namespace turanpack::harness {

namespace {

struct ExhaustiveResult {
  int value = 0;
  std::uint32_t extremal = 0;
  std::uint64_t graphs = 0;
};

int pair_index(int n, int u, int v) {
  // Row-major over u < v.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((mask >> pair_index(n, u, v)) & 1u) b.add_edge(u, v);
  return std::move(b).build();
}

// Edge masks of every labeled copy of kK_p on n vertices.
std::vector<std::uint32_t> copy_masks(int n, int k, int p) {
  std::vector<std::uint32_t> cliques;
  std::vector<std::uint32_t> vertex_sets;
  for (std::uint32_t vs = 0; vs < (1u << n); ++vs) {
    if (std::popcount(vs) != p) continue;
    std::uint32_t em = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (((vs >> u) & 1u) && ((vs >> v) & 1u)) em |= 1u << pair_index(n, u, v);
    vertex_sets.push_back(vs);
    cliques.push_back(em);
  }
  std::vector<std::uint32_t> out;
  auto rec = [&](auto&& self, std::size_t from, int left, std::uint32_t used, std::uint32_t em) {
    if (left == 0) {
      out.push_back(em);
      return;
    }
    for (std::size_t i = from; i < vertex_sets.size(); ++i)
      if (!(vertex_sets[i] & used)) self(self, i + 1, left - 1, used | vertex_sets[i], em | cliques[i]);
  };
  rec(rec, 0, k, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExhaustiveResult exhaustive(int n, int k, int p) {
  if (n < 0) throw PreconditionError("oracle requires n >= 0");
  if (n > kOracleMaxN)
    throw SizeGuardError("exhaustive oracle is limited to n <= " + std::to_string(kOracleMaxN) +
                         " (got n = " + std::to_string(n) + ")");
  if (k < 1 || p < 2) throw PreconditionError("oracle requires k >= 1 and p >= 2");
  const int m = n * (n - 1) / 2;
  const auto masks = copy_masks(n, k, p);
  ExhaustiveResult r;
  r.value = -1;
  r.graphs = std::uint64_t{1} << m;
  for (std::uint32_t g = 0; g < (1u << m); ++g) {
    const int e = std::popcount(g);
    if (e <= r.value) continue;
    const bool contains =
        std::any_of(masks.begin(), masks.end(), [&](std::uint32_t c) { return (c & g) == c; });
    if (!contains) {
      r.value = e;
      r.extremal = g;
    }
  }
  return r;
}

ResultRecord record(std::string command, Json params, Outcome o, Json payload,
                    std::optional<std::uint64_t> seed) {
  ResultRecord r;
  r.command = std::move(command);
  r.parameters = std::move(params);
  r.outcome = o;
  r.payload = std::move(payload);
  r.provenance.version = version();
  r.provenance.seed = seed;
  return r;
}

// g is (s/(k-1)) K_{2k-1} plus isolated vertices with (2k-1)s edges.
bool is_clique_union(const Graph& g, int k, int s) {
  if ((s % (k - 1)) != 0) return false;
  if (g.size() != static_cast<long long>(2 * k - 1) * s) return false;
  int cliques = 0;
  for (const auto& c : connected_components(g)) {
    if (c.size() == 1) continue;
    if (c.size() != 2 * k - 1 || !is_clique(g, c)) return false;
    ++cliques;
  }
  return cliques == s / (k - 1);
}

Graph clique_union(int n, int cliques, int size) {
  GraphBuilder b(n);
  std::vector<Vertex> vs(size);
  for (int c = 0; c < cliques; ++c) {
    for (int i = 0; i < size; ++i) vs[i] = c * size + i;
    b.add_clique(vs);
  }
  return std::move(b).build();
}

ResultRecord probe_sparse_packing(const ProbeQuery& q, const Settings& st) {
  const int k = q.k, p = q.p;
  if (p < 3 || k < 2) throw PreconditionError("probe 5.1 requires p >= 3 and k >= 2");
  if (q.trials < 0) throw PreconditionError("trials must be non-negative");
  const int s_max = (k - 1) * p - 1;
  if (k * p - 1 + s_max > packing::kMaxGuard)
    throw SizeGuardError("probe 5.1 host order " + std::to_string(k * p - 1 + s_max) +
                         " exceeds the kernel limit " + std::to_string(packing::kMaxGuard));
  const auto limits = limits_of(st);
  std::mt19937_64 rng(st.seed);
  std::uniform_int_distribution<int> pick_s(1, s_max);
  int witnesses = 0, structures = 0;
  Json params{{"conjecture", "5.1"}, {"k", k}, {"p", p}, {"trials", q.trials}};
  for (int t = 0; t < q.trials; ++t) {
    const int s = pick_s(rng);
    const int n = k * p - 1 + s;
    const Graph g = sample_bounded_graph(rng, n, static_cast<long long>(2 * k - 1) * s, 2 * k - 2);
    if (packing::find_disjoint_independent_sets(g, k, p, limits)) {
      ++witnesses;
    } else if (is_clique_union(g, k, s)) {
      ++structures;
    } else {
      return record("probe", std::move(params), Outcome::counterexample,
                    Json{{"trial", t}, {"n", n}, {"s", s}, {"edges", g.size()},
                         {"max_degree", g.max_degree()}, {"graph6", to_graph6(g)}},
                    st.seed);
    }
  }
  return record("probe", std::move(params), Outcome::none,
                Json{{"trials", q.trials}, {"witnesses", witnesses}, {"structures", structures},
                     {"message", "no counterexample in " + std::to_string(q.trials) + " trials"}},
                st.seed);
}

ResultRecord probe_middle_range(const ProbeQuery& q, const Settings& st) {
  const int k = q.k, p = q.p;
  if (p < 3 || k < 4 || (k - 1) * p - k * k + 3 * k - 3 < 0)
    throw PreconditionError("probe 5.2 requires p >= 3, k >= 4 and (k-1)p - k^2 + 3k - 3 >= 0");
  if (q.trials < 0) throw PreconditionError("trials must be non-negative");
  const int n_lo = k * p + k * k - 3 * k + 1;
  const int n_mid_hi = (2 * k - 1) * p - 2;
  const int n_hi = (2 * k - 1) * p + 2;
  if (n_hi > packing::kMaxGuard)
    throw SizeGuardError("probe 5.2 host order " + std::to_string(n_hi) +
                         " exceeds the kernel limit " + std::to_string(packing::kMaxGuard));
  const auto limits = limits_of(st);
  std::mt19937_64 rng(st.seed);
  Json params{{"conjecture", "5.2"}, {"k", k}, {"p", p}, {"trials", q.trials}};
  const int rows_count = n_hi - n_lo + 1;
  const int per_row = rows_count > 0 ? q.trials / rows_count : 0;
  Json rows = Json::array();
  Json failure = nullptr;
  int sampled = 0;
  for (int n = n_lo; n <= n_hi && failure.is_null(); ++n) {
    Json row{{"n", n}};
    const int s = n - k * p + 1;
    if (n <= n_mid_hi) {
      const auto conj = formulas::choose2(n) - static_cast<std::int64_t>(2 * k - 1) * s;
      row["regime"] = "middle";
      row["conjectured"] = conj;
      if (s % (k - 1) == 0) {
        const Graph h = clique_union(n, s / (k - 1), 2 * k - 1);
        const bool ok = !packing::find_disjoint_independent_sets(h, k, p, limits);
        row["construction_ok"] = ok;
        if (!ok) failure = Json{{"n", n}, {"reason", "clique-union construction contains the pattern"}};
      } else {
        row["construction_ok"] = nullptr;
      }
      // A complement with fewer than (2k-1)s edges and no packing beats the value.
      for (int t = 0; t < per_row && failure.is_null(); ++t, ++sampled) {
        const Graph g = sample_bounded_graph(rng, n, static_cast<long long>(2 * k - 1) * s - 1,
                                             2 * k - 2);
        if (!packing::find_disjoint_independent_sets(g, k, p, limits))
          failure = Json{{"n", n},
                         {"reason", "sparse complement without the packing"},
                         {"complement_edges", g.size()},
                         {"graph6", to_graph6(g)}};
      }
    } else {
      const auto conj = formulas::hub_expression(n, k, p);
      row["regime"] = "large";
      row["conjectured"] = conj;
      const auto c = constructions::build({constructions::Family::hub_join, {n, p, k}});
      const bool ok = c.graph.size() == conj &&
                      !packing::find_disjoint_independent_sets(complement(c.graph), k, p, limits);
      row["construction_ok"] = ok;
      if (!ok) failure = Json{{"n", n}, {"reason", "hub construction contains the pattern"}};
    }
    if (k == 4) {
      const auto known = formulas::ex_4_cliques(n, p).value;
      row["known"] = known;
      if (known != row["conjectured"].get<std::int64_t>() && failure.is_null())
        failure = Json{{"n", n}, {"reason", "disagrees with the k = 4 value"}, {"known", known}};
    }
    rows.push_back(std::move(row));
  }
  const auto mid_at_boundary =
      formulas::choose2(n_mid_hi) - static_cast<std::int64_t>(2 * k - 1) * (n_mid_hi - k * p + 1);
  const auto hub_at_boundary = formulas::hub_expression(n_mid_hi, k, p);
  Json payload{{"rows", std::move(rows)},
               {"sampled", sampled},
               {"boundary", {{"n", n_mid_hi},
                             {"middle", mid_at_boundary},
                             {"hub", hub_at_boundary},
                             {"continuous", mid_at_boundary == hub_at_boundary}}}};
  if (!failure.is_null()) {
    payload["counterexample"] = std::move(failure);
    return record("probe", std::move(params), Outcome::counterexample, std::move(payload), st.seed);
  }
  payload["message"] = "no counterexample in " + std::to_string(sampled) + " samples";
  return record("probe", std::move(params), Outcome::none, std::move(payload), st.seed);
}

}  // namespace

int exhaustive_ex(int n, int k, int p) { return exhaustive(n, k, p).value; }

ResultRecord cmd_oracle_ex(int n, std::string_view pattern, int k, int p) {
  Json params{{"n", n}, {"pattern", pattern}};
  if (pattern == "Kp") {
    k = 1;
    params["p"] = p;
  } else if (pattern == "kK2") {
    p = 2;
    params["k"] = k;
  } else if (pattern == "kKp") {
    params["k"] = k;
    params["p"] = p;
  } else {
    throw PreconditionError("oracle pattern must be Kp, kK2 or kKp");
  }
  const auto r = exhaustive(n, k, p);
  return record("oracle", std::move(params), Outcome::value,
                Json{{"value", r.value},
                     {"graphs", r.graphs},
                     {"extremal_graph6", to_graph6(graph_from_mask(n, r.extremal))}},
                std::nullopt);
}

ResultRecord cmd_probe_conjecture(const ProbeQuery& q, const Settings& s) {
  if (q.which == "5.1") return probe_sparse_packing(q, s);
  if (q.which == "5.2") return probe_middle_range(q, s);
  throw PreconditionError("probe must be 5.1 or 5.2");
}

Graph sample_bounded_graph(std::mt19937_64& rng, int n, long long max_edges, int max_degree) {
  if (n < 0 || max_edges < 0 || max_degree < 0)
    throw PreconditionError("sampler arguments must be non-negative");
  const long long cap = std::min<long long>({max_edges, static_cast<long long>(n) * (n - 1) / 2,
                                             static_cast<long long>(n) * max_degree / 2});
  std::uniform_int_distribution<long long> pick_m(0, std::max(0LL, cap));
  long long m = pick_m(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  // Near-regular targets can be unreachable by greedy placement; after a few
  // restarts the target is drawn again.
  for (int attempt = 1;; ++attempt) {
    if (n < 2 || m == 0) return Graph::empty(n);
    if (attempt % 20 == 0) m = pick_m(rng);
    GraphBuilder b(n);
    std::vector<int> deg(n, 0);
    long long placed = 0;
    int misses = 0;
    while (placed < m && misses < 50 * n * n) {
      const int u = pick(rng), v = pick(rng);
      if (u == v || b.has_edge(u, v) || deg[u] >= max_degree || deg[v] >= max_degree) {
        ++misses;
        continue;
      }
      b.add_edge(u, v);
      ++deg[u], ++deg[v];
      ++placed;
      misses = 0;
    }
    if (placed == m) return std::move(b).build();
  }
}

}  // namespace turanpack::harness
