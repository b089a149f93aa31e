#include "turanpack/harness.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "turanpack/constructions.hpp"
#include "turanpack/errors.hpp"
#include "turanpack/formulas.hpp"
#include "turanpack/shifting.hpp"

namespace turanpack::harness {

namespace {

using constructions::ConstructionRef;
using formulas::TuranValue;

Json set_json(const VertexSet& s) { return Json(s.to_vector()); }

Json sets_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

Json ref_json(const ConstructionRef& r) {
  const auto& p = r.params;
  Json params = Json::object();
  for (auto [key, value] : {std::pair{"n", p.n}, {"p", p.p}, {"k", p.k}, {"q", p.q},
                            {"s", p.s}, {"x", p.x}, {"a", p.a}})
    if (value != 0) params[key] = value;
  return Json{{"family", constructions::family_name(r.family)}, {"params", params}};
}

Json value_json(const TuranValue& v) {
  Json j{{"value", v.value}, {"regime", formulas::regime_name(v.regime)}};
  j["construction"] = v.construction ? ref_json(*v.construction) : Json(nullptr);
  if (v.delegated_to_matchings) j["delegated_to_matchings"] = true;
  return j;
}

ResultRecord make_record(std::string command, Json parameters, Outcome outcome, Json payload,
                         std::optional<std::uint64_t> seed = std::nullopt) {
  ResultRecord r;
  r.command = std::move(command);
  r.parameters = std::move(parameters);
  r.outcome = outcome;
  r.payload = std::move(payload);
  r.provenance.version = version();
  r.provenance.seed = seed;
  return r;
}

long long parse_int(std::string_view text, std::string_view key) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw PreconditionError("config value for " + std::string(key) + " is not an integer: \"" +
                            std::string(text) + "\"");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int pattern_copies(std::string_view pattern) {
  if (pattern == "Kp") return 1;
  if (pattern == "2Kp") return 2;
  if (pattern == "3Kp") return 3;
  if (pattern == "4Kp") return 4;
  return 0;
}

TuranValue table_value(std::string_view pattern, std::int64_t n, std::int64_t p) {
  switch (pattern_copies(pattern)) {
    case 1: return formulas::ex_single_clique(n, p);
    case 2: return formulas::ex_2_cliques(n, p);
    case 3: return formulas::ex_3_cliques(n, p);
    case 4: return formulas::ex_4_cliques(n, p);
    default: break;
  }
  throw PreconditionError("unknown table pattern \"" + std::string(pattern) + "\"");
}

// Builds the construction and checks its edge count against `value` and the
// absence of k disjoint K_p in the extremal graph.
bool verify_construction(const ConstructionRef& ref, std::int64_t value, int k, int p,
                         const packing::SearchLimits& limits) {
  const auto c = constructions::build(ref);
  if (c.graph.size() != c.descriptor.expected_edges) return false;
  if (constructions::extremal_edges(c.descriptor) != value) return false;
  if (c.descriptor.claim && !(c.descriptor.claim->k == k && c.descriptor.claim->p == p))
    return false;
  const Graph independent_side = c.descriptor.framing == constructions::Framing::complement
                                     ? c.graph
                                     : complement(c.graph);
  return !packing::find_disjoint_independent_sets(independent_side, k, p, limits).has_value();
}

}  // namespace

std::string version() { return TURANPACK_VERSION; }

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::value: return "value";
    case Outcome::witness: return "witness";
    case Outcome::certificate: return "certificate";
    case Outcome::counterexample: return "counterexample";
    case Outcome::none: return "none";
  }
  return "none";
}

Outcome outcome_from_name(std::string_view name) {
  for (auto o : {Outcome::value, Outcome::witness, Outcome::certificate, Outcome::counterexample,
                 Outcome::none})
    if (outcome_name(o) == name) return o;
  throw ParseError("unknown outcome \"" + std::string(name) + "\"");
}

Json ResultRecord::to_json() const {
  Json prov{{"version", provenance.version}};
  prov["seed"] = provenance.seed ? Json(*provenance.seed) : Json(nullptr);
  if (provenance.timestamp) prov["timestamp"] = *provenance.timestamp;
  if (provenance.runtime_ms) prov["runtime_ms"] = *provenance.runtime_ms;
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", parameters},
              {"outcome", outcome_name(outcome)},
              {"payload", payload},
              {"provenance", prov}};
}

ResultRecord ResultRecord::from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ParseError("unsupported result schema version");
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.outcome = outcome_from_name(j.at("outcome").get<std::string>());
    r.payload = j.at("payload");
    const auto& prov = j.at("provenance");
    r.provenance.version = prov.at("version").get<std::string>();
    if (!prov.at("seed").is_null()) r.provenance.seed = prov.at("seed").get<std::uint64_t>();
    if (prov.contains("timestamp")) r.provenance.timestamp = prov["timestamp"].get<std::string>();
    if (prov.contains("runtime_ms")) r.provenance.runtime_ms = prov["runtime_ms"].get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed result record: ") + e.what());
  }
}

std::string ResultRecord::dump() const { return to_json().dump(); }

void apply_config_text(Settings& s, std::string_view text) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw PreconditionError("config line " + std::to_string(line_no) + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "guard_n") {
      s.guard_n = static_cast<int>(parse_int(value, key));
    } else if (key == "budget") {
      s.budget = static_cast<int>(parse_int(value, key));
    } else if (key == "seed") {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size())
        throw PreconditionError("config value for seed is not an unsigned integer");
      s.seed = v;
    } else {
      throw PreconditionError("config line " + std::to_string(line_no) + ": unknown key \"" +
                              std::string(key) + "\"");
    }
  }
}

void apply_environment(Settings& s) {
  if (const char* env = std::getenv("TURANPACK_GUARD_N"))
    s.guard_n = static_cast<int>(parse_int(env, "TURANPACK_GUARD_N"));
}

packing::SearchLimits limits_of(const Settings& s) {
  if (s.guard_n < 1 || s.guard_n > packing::kMaxGuard)
    throw PreconditionError("guard_n must be in 1.." + std::to_string(packing::kMaxGuard));
  return packing::SearchLimits{s.guard_n};
}

ResultRecord cmd_formula(const FormulaQuery& q) {
  Json params{{"pattern", q.pattern}};
  auto use = [&](const char* key, std::int64_t v) { params[key] = v; };
  Json payload;
  const auto& pat = q.pattern;
  if (pat == "Kp") {
    use("n", q.n), use("p", q.p);
    payload = value_json(formulas::ex_single_clique(q.n, q.p));
  } else if (pat == "kK2") {
    use("n", q.n), use("k", q.k);
    payload = value_json(formulas::ex_k_matchings(q.n, q.k));
  } else if (pat == "kKp-tight") {
    use("k", q.k), use("p", q.p);
    payload = value_json(formulas::ex_tight_k_cliques(q.k, q.p));
  } else if (pat == "2Kp") {
    use("n", q.n), use("p", q.p);
    payload = value_json(formulas::ex_2_cliques(q.n, q.p));
  } else if (pat == "KpKq") {
    use("n", q.n), use("p", q.p), use("q", q.q);
    payload = value_json(formulas::ex_two_distinct_cliques(q.n, q.p, q.q));
  } else if (pat == "3Kp") {
    use("n", q.n), use("p", q.p);
    payload = value_json(formulas::ex_3_cliques(q.n, q.p));
  } else if (pat == "4Kp") {
    use("n", q.n), use("p", q.p);
    payload = value_json(formulas::ex_4_cliques(q.n, q.p));
  } else if (pat == "f3") {
    use("n", q.n), use("p", q.p);
    payload = Json{{"value", formulas::f_3_independent(q.n, q.p)}, {"regime", "f3"},
                   {"construction", nullptr}};
  } else if (pat == "hub") {
    use("n", q.n), use("k", q.k), use("p", q.p);
    payload = Json{{"value", formulas::hub_expression(q.n, q.k, q.p)}, {"regime", "hub-expression"},
                   {"construction", nullptr}};
  } else if (pat == "extend") {
    use("n0", q.n0), use("k", q.k), use("p", q.p), use("verified", q.verified), use("n", q.n);
    payload = value_json(formulas::extend_hub_value(q.n0, q.k, q.p, q.verified, q.n));
  } else {
    throw PreconditionError("unknown pattern \"" + pat +
                            "\"; expected Kp, kK2, kKp-tight, 2Kp, KpKq, 3Kp, 4Kp, f3, hub or extend");
  }
  return make_record("formula", std::move(params), Outcome::value, std::move(payload));
}

ResultRecord cmd_table(const TableQuery& q, const Settings& s) {
  const int copies = pattern_copies(q.pattern);
  if (copies == 0 && q.pattern != "f3")
    throw PreconditionError("table supports Kp, 2Kp, 3Kp, 4Kp and f3");
  const auto limits = limits_of(s);
  Json rows = Json::array();
  for (std::int64_t p = q.p_lo; p <= q.p_hi; ++p) {
    for (std::int64_t n = q.n_lo; n <= q.n_hi; ++n) {
      Json row{{"n", n}, {"p", p}};
      if (q.pattern == "f3") {
        row["value"] = formulas::f_3_independent(n, p);
        row["regime"] = "f3";
        row["construction"] = nullptr;
        row["verified"] = nullptr;
        row["note"] = "";
        rows.push_back(std::move(row));
        continue;
      }
      const auto v = table_value(q.pattern, n, p);
      row["value"] = v.value;
      row["regime"] = formulas::regime_name(v.regime);
      row["construction"] =
          v.construction ? Json(constructions::family_name(v.construction->family)) : Json(nullptr);
      if (q.verify && v.construction)
        row["verified"] = verify_construction(*v.construction, v.value, copies,
                                              static_cast<int>(p), limits);
      else
        row["verified"] = nullptr;
      std::string note;
      if (v.regime == formulas::Regime::four_cliques_large) {
        const auto quoted = formulas::four_cliques_quoted_large_form(n, p);
        note = "quoted closed form 3+3(n-1)+t(n-3;p-1) = " + std::to_string(quoted) +
               " exceeds the construction count 3+3(n-3)+t(n-3;p-1) by " +
               std::to_string(quoted - v.value);
      }
      row["note"] = note;
      rows.push_back(std::move(row));
    }
  }
  Json params{{"pattern", q.pattern}, {"n_range", {q.n_lo, q.n_hi}},
              {"p_range", {q.p_lo, q.p_hi}}, {"verify", q.verify}};
  if (q.verify) params["guard_n"] = s.guard_n;
  return make_record("table", std::move(params), Outcome::value, Json{{"rows", std::move(rows)}});
}

std::string table_csv(const ResultRecord& table) {
  std::ostringstream out;
  out << "n,p,value,regime,construction,verified,note\n";
  for (const auto& row : table.payload.at("rows")) {
    out << row.at("n").get<std::int64_t>() << ',' << row.at("p").get<std::int64_t>() << ','
        << row.at("value").get<std::int64_t>() << ',' << row.at("regime").get<std::string>() << ',';
    if (!row.at("construction").is_null()) out << row.at("construction").get<std::string>();
    out << ',';
    if (!row.at("verified").is_null()) out << (row.at("verified").get<bool>() ? "true" : "false");
    out << ",\"" << row.at("note").get<std::string>() << "\"\n";
  }
  return out.str();
}

ResultRecord cmd_construct(const ConstructQuery& q, const Settings& s) {
  const auto family = constructions::family_from_name(q.family);
  if (!family)
    throw PreconditionError("unknown family \"" + q.family +
                            "\"; expected turan, hub-join, J, tight-A, tight-B, G1..G5, star or "
                            "clique-isolated");
  ConstructionRef ref{*family, {q.n, q.p, q.k, q.q, q.s, q.x, q.a}};
  const auto c = constructions::build(ref);
  const auto& d = c.descriptor;
  Json payload = ref_json(ref);
  payload["n"] = c.graph.order();
  payload["edges"] = c.graph.size();
  payload["expected_edges"] = d.expected_edges;
  payload["framing"] = d.framing == constructions::Framing::direct ? "direct" : "complement";
  payload["extremal_edges"] = constructions::extremal_edges(d);
  payload["claim"] = d.claim ? Json{{"k", d.claim->k}, {"p", d.claim->p}} : Json(nullptr);
  if (c.graph.size() != d.expected_edges)
    throw SoundnessAlarm("construction edge count disagrees with its descriptor");
  if (q.verify && d.claim) {
    const Graph side = d.framing == constructions::Framing::complement ? c.graph : complement(c.graph);
    payload["verified"] =
        !packing::find_disjoint_independent_sets(side, d.claim->k, d.claim->p, limits_of(s));
  }
  payload["graph6"] = to_graph6(c.graph);
  Json params = ref_json(ref)["params"];
  params["family"] = q.family;
  return make_record("construct", std::move(params), Outcome::value, std::move(payload));
}

ResultRecord cmd_resolve(const Graph& g, int p, const Settings& s) {
  shifting::ResolveOptions opts{s.budget, limits_of(s)};
  const auto r = shifting::resolve(g, p, opts);
  Json stats{{"rebuilds", r.stats.rebuilds},
             {"inaccessible_trajectory", r.stats.inaccessible_trajectory},
             {"seeded", r.stats.seeded},
             {"fallback", r.stats.fallback}};
  Json moves = Json::array();
  for (auto m : r.stats.moves) moves.push_back(shifting::move_kind_name(m));
  stats["moves"] = std::move(moves);
  Json params{{"n", g.order()}, {"p", p}, {"budget", s.budget}, {"guard_n", s.guard_n}};
  if (r.is_witness()) {
    const auto& w = std::get<packing::PackingWitness>(r.outcome);
    if (!packing::verify_witness(g, w, 4, p, packing::Mode::independent).ok())
      throw SoundnessAlarm("resolve witness failed re-verification");
    return make_record("resolve", std::move(params), Outcome::witness,
                       Json{{"sets", sets_json(w.sets)}, {"stats", stats}});
  }
  const auto& c = std::get<shifting::StructureCertificate>(r.outcome);
  if (!shifting::verify_certificate(g, p, c))
    throw SoundnessAlarm("resolve certificate failed re-verification");
  return make_record("resolve", std::move(params), Outcome::certificate,
                     Json{{"seven_cliques", sets_json(c.seven_cliques)},
                          {"isolated", set_json(c.isolated)},
                          {"s", c.s},
                          {"edges", c.edges},
                          {"max_degree", c.max_degree},
                          {"stats", stats}});
}

ResultRecord cmd_pack(const Graph& g, int k, int p, packing::Mode mode, const Settings& s) {
  const auto limits = limits_of(s);
  const auto w = mode == packing::Mode::independent
                     ? packing::find_disjoint_independent_sets(g, k, p, limits)
                     : packing::find_clique_packing(g, k, p, limits);
  Json params{{"n", g.order()}, {"k", k}, {"p", p},
              {"mode", mode == packing::Mode::independent ? "independent" : "clique"},
              {"guard_n", s.guard_n}};
  if (!w) return make_record("pack", std::move(params), Outcome::none, Json::object());
  if (!packing::verify_witness(g, *w, k, p, mode).ok())
    throw SoundnessAlarm("packing witness failed re-verification");
  return make_record("pack", std::move(params), Outcome::witness, Json{{"sets", sets_json(w->sets)}});
}

ResultRecord cmd_verify(const Graph& g, const Json& witness, int k, int p, packing::Mode mode) {
  const Json* sets = nullptr;
  if (witness.contains("payload") && witness["payload"].contains("sets"))
    sets = &witness["payload"]["sets"];
  else if (witness.contains("sets"))
    sets = &witness["sets"];
  if (!sets || !sets->is_array()) throw ParseError("witness JSON has no \"sets\" array");
  packing::PackingWitness w;
  Json payload;
  try {
    for (const auto& s : *sets) {
      VertexSet vs(g.order());
      for (const auto& v : s) {
        const auto x = v.get<long long>();
        if (x < 0 || x >= g.order()) {
          payload = Json{{"ok", false},
                         {"violation", "range"},
                         {"detail", "vertex " + std::to_string(x) + " outside the graph"}};
          break;
        }
        vs.insert(static_cast<Vertex>(x));
      }
      if (!payload.is_null()) break;
      w.sets.push_back(std::move(vs));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
  if (payload.is_null()) {
    const auto report = packing::verify_witness(g, w, k, p, mode);
    payload = Json{{"ok", report.ok()},
                   {"violation", packing::violation_name(report.violation)},
                   {"detail", report.detail}};
  }
  Json params{{"n", g.order()}, {"k", k}, {"p", p},
              {"mode", mode == packing::Mode::independent ? "independent" : "clique"}};
  return make_record("verify", std::move(params), Outcome::value, std::move(payload));
}

ResultRecord cmd_color(const Graph& g, int colors, bool exact) {
  Json params{{"n", g.order()}, {"colors", colors}, {"exact", exact}};
  auto coloring_payload = [&](const packing::EquitableColoring& c) {
    if (!packing::is_equitable_coloring(g, c))
      throw SoundnessAlarm("equitable coloring failed re-verification");
    Json sizes = Json::array();
    for (const auto& cls : c.classes) sizes.push_back(cls.size());
    return Json{{"classes", sets_json(c.classes)}, {"sizes", sizes}};
  };
  if (!exact)
    return make_record("color", std::move(params), Outcome::value,
                       coloring_payload(packing::equitable_coloring(g, colors)));
  const auto r = packing::equitable_coloring_exact(g, colors);
  if (r.coloring)
    return make_record("color", std::move(params), Outcome::value, coloring_payload(*r.coloring));
  Json payload{{"exists", false}};
  if (r.krr) {
    const auto& [a, b] = *r.krr;
    bool complete = true;
    a.for_each([&](Vertex u) { b.for_each([&](Vertex v) { complete = complete && g.adjacent(u, v); }); });
    if (!complete) throw SoundnessAlarm("K_{r,r} subgraph failed re-verification");
    payload["krr"] = Json{{"a", set_json(a)}, {"b", set_json(b)}};
  }
  return make_record("color", std::move(params), Outcome::none, std::move(payload));
}

}  // namespace turanpack::harness
