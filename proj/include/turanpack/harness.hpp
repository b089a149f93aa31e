#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <json.hpp>

#include "turanpack/graph.hpp"
#include "turanpack/packing.hpp"

namespace turanpack::harness {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

enum class Outcome { value, witness, certificate, counterexample, none };
std::string_view outcome_name(Outcome o);
Outcome outcome_from_name(std::string_view name);

struct Provenance {
  std::string version;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> timestamp;
  std::optional<double> runtime_ms;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ResultRecord {
  std::string command;
  Json parameters = Json::object();
  Outcome outcome = Outcome::none;
  Json payload = Json::object();
  Provenance provenance;

  Json to_json() const;
  static ResultRecord from_json(const Json& j);
  /// Single-line JSON.
  std::string dump() const;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Settings shared by the commands. Precedence, lowest first: built-in
/// defaults, TURANPACK_GUARD_N, the config file, command-line flags.
struct Settings {
  int guard_n = 64;
  int budget = -1;
  std::uint64_t seed = kDefaultSeed;
};

/// key=value lines; '#' starts a comment. Keys: guard_n, budget, seed.
void apply_config_text(Settings& s, std::string_view text);
/// Reads TURANPACK_GUARD_N when set.
void apply_environment(Settings& s);

packing::SearchLimits limits_of(const Settings& s);

// ---- commands ---------------------------------------------------------------

struct FormulaQuery {
  std::string pattern;  // Kp kK2 kKp-tight 2Kp KpKq 3Kp 4Kp f3 hub extend
  std::int64_t n = 0, p = 0, k = 0, q = 0, n0 = 0, verified = 0;
};
ResultRecord cmd_formula(const FormulaQuery& q);

struct TableQuery {
  std::string pattern;  // Kp 2Kp 3Kp 4Kp f3
  std::int64_t n_lo = 0, n_hi = -1, p_lo = 0, p_hi = -1;
  bool verify = false;
};
ResultRecord cmd_table(const TableQuery& q, const Settings& s);
std::string table_csv(const ResultRecord& table);

struct ConstructQuery {
  std::string family;
  std::int64_t n = 0, p = 0, k = 0, q = 0, s = 0, x = 0, a = 0;
  bool verify = false;
};
ResultRecord cmd_construct(const ConstructQuery& q, const Settings& s);

ResultRecord cmd_resolve(const Graph& g, int p, const Settings& s);
ResultRecord cmd_pack(const Graph& g, int k, int p, packing::Mode mode, const Settings& s);
/// `witness` is either a record whose payload has "sets" or {"sets": [...]}.
ResultRecord cmd_verify(const Graph& g, const Json& witness, int k, int p, packing::Mode mode);
ResultRecord cmd_color(const Graph& g, int colors, bool exact);

inline constexpr int kOracleMaxN = 7;
/// Exhaustive ex(n, kK_p) over all labeled graphs on n <= 7 vertices.
/// pattern: "Kp" (uses p), "kK2" (uses k) or "kKp" (uses k and p).
ResultRecord cmd_oracle_ex(int n, std::string_view pattern, int k, int p);
/// The bare maximum, for tests.
int exhaustive_ex(int n, int k, int p);

struct ProbeQuery {
  std::string which;  // "5.1" or "5.2"
  int k = 0, p = 0;
  int trials = 1000;
};
ResultRecord cmd_probe_conjecture(const ProbeQuery& q, const Settings& s);

/// Uniform edge target m in [0, max_edges], then random pairs rejecting
/// duplicates and degree overflow; restarts when stuck.
Graph sample_bounded_graph(std::mt19937_64& rng, int n, long long max_edges, int max_degree);

std::string version();

}  // namespace turanpack::harness
