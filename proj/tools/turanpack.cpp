#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "turanpack/errors.hpp"
#include "turanpack/graph.hpp"
#include "turanpack/harness.hpp"

namespace hx = turanpack::harness;
using turanpack::Graph;

namespace {

enum Exit { kOk = 0, kPrecondition = 2, kSizeGuard = 3, kSoundness = 4 };

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw turanpack::PreconditionError("cannot open \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph read_graph(const std::string& path) {
  if (path.empty()) throw turanpack::PreconditionError("--input is required");
  return turanpack::parse_graph_auto(read_source(path));
}

turanpack::packing::Mode parse_mode(const std::string& m) {
  if (m == "independent") return turanpack::packing::Mode::independent;
  if (m == "clique") return turanpack::packing::Mode::clique;
  throw turanpack::PreconditionError("--mode must be independent or clique");
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal numbers for disjoint cliques, packing search and vertex shifting"};
  app.set_version_flag("--version", hx::version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, input, format = "json", output;
  std::optional<int> guard_n, budget;
  std::optional<std::uint64_t> seed;
  bool timing = false, verify = false;
  app.add_option("--config", config_path, "key=value file with guard_n, budget, seed");
  app.add_option("--guard-n", guard_n, "largest non-clique component the exact search accepts");
  app.add_option("--budget", budget, "digraph rebuilds before the exact fallback");
  app.add_option("--seed", seed, "64-bit seed for sampling");
  app.add_option("--format", format, "json, csv or graph6")
      ->check(CLI::IsMember({"json", "csv", "graph6"}));
  app.add_option("-o,--output", output, "write the record to this file instead of stdout");
  app.add_flag("--timing", timing, "record timestamp and runtime in the provenance");

  hx::FormulaQuery fq;
  auto* formula = app.add_subcommand("formula", "closed-form extremal numbers");
  formula->add_option("--pattern", fq.pattern, "Kp kK2 kKp-tight 2Kp KpKq 3Kp 4Kp f3 hub extend")
      ->required();
  formula->add_option("-n", fq.n);
  formula->add_option("-p", fq.p);
  formula->add_option("-k", fq.k);
  formula->add_option("-q", fq.q);
  formula->add_option("--n0", fq.n0, "verified order for extend");
  formula->add_option("--verified-value", fq.verified, "edge count verified at n0 for extend");

  hx::TableQuery tq;
  auto* table = app.add_subcommand("table", "piecewise values over an (n, p) grid");
  table->add_option("--pattern", tq.pattern, "Kp 2Kp 3Kp 4Kp f3")->required();
  table->add_option("--n-min", tq.n_lo)->required();
  table->add_option("--n-max", tq.n_hi)->required();
  table->add_option("--p-min", tq.p_lo)->required();
  table->add_option("--p-max", tq.p_hi)->required();
  table->add_flag("--verify", verify, "build and check each row's construction");

  hx::ConstructQuery cq;
  auto* construct = app.add_subcommand("construct", "build a named extremal construction");
  construct->add_option("--family", cq.family, "turan hub-join J tight-A tight-B G1..G5 star clique-isolated")
      ->required();
  construct->add_option("-n", cq.n);
  construct->add_option("-p", cq.p);
  construct->add_option("-k", cq.k);
  construct->add_option("-q", cq.q);
  construct->add_option("-s", cq.s);
  construct->add_option("-x", cq.x);
  construct->add_option("-a", cq.a);
  construct->add_flag("--verify", verify, "check the pattern claim with the exact search");

  int p = 0, k = 0, colors = 0, n = 0;
  std::string mode = "independent", witness_path, pattern;
  auto* resolve = app.add_subcommand("resolve", "four independent p-sets or the K_7-union certificate");
  resolve->add_option("--input", input, "graph6 or edge list; - for stdin")->required();
  resolve->add_option("-p", p)->required();

  auto* pack = app.add_subcommand("pack", "k disjoint independent p-sets (or K_p copies)");
  pack->add_option("--input", input)->required();
  pack->add_option("-k", k)->required();
  pack->add_option("-p", p)->required();
  pack->add_option("--mode", mode, "independent or clique");

  auto* verify_cmd = app.add_subcommand("verify", "check a packing witness");
  verify_cmd->add_option("--input", input)->required();
  verify_cmd->add_option("--witness", witness_path, "record or {\"sets\": ...} JSON")->required();
  verify_cmd->add_option("-k", k)->required();
  verify_cmd->add_option("-p", p)->required();
  verify_cmd->add_option("--mode", mode);

  auto* oracle = app.add_subcommand("oracle", "exhaustive ex(n, kK_p) for n <= 7");
  oracle->add_option("-n", n)->required();
  oracle->add_option("--pattern", pattern, "Kp kK2 kKp")->required();
  oracle->add_option("-k", k);
  oracle->add_option("-p", p);

  hx::ProbeQuery pq;
  auto* probe = app.add_subcommand("probe", "random search against the open conjectures");
  probe->add_option("--conjecture", pq.which, "5.1 or 5.2")->required();
  probe->add_option("-k", pq.k)->required();
  probe->add_option("-p", pq.p)->required();
  probe->add_option("--trials", pq.trials);

  bool exact = false;
  auto* color = app.add_subcommand("color", "equitable coloring");
  color->add_option("--input", input)->required();
  color->add_option("--colors", colors)->required();
  color->add_flag("--exact", exact, "exhaustive search; may return a K_{r,r} certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kPrecondition;
  }

  try {
    hx::Settings settings;
    hx::apply_environment(settings);
    if (!config_path.empty()) hx::apply_config_text(settings, read_source(config_path));
    if (guard_n) settings.guard_n = *guard_n;
    if (budget) settings.budget = *budget;
    if (seed) settings.seed = *seed;
    tq.verify = verify;
    cq.verify = verify;

    const auto start = std::chrono::steady_clock::now();
    hx::ResultRecord rec;
    std::string graph6;
    if (formula->parsed()) {
      rec = hx::cmd_formula(fq);
    } else if (table->parsed()) {
      rec = hx::cmd_table(tq, settings);
    } else if (construct->parsed()) {
      rec = hx::cmd_construct(cq, settings);
      graph6 = rec.payload["graph6"].get<std::string>();
    } else if (resolve->parsed()) {
      rec = hx::cmd_resolve(read_graph(input), p, settings);
    } else if (pack->parsed()) {
      rec = hx::cmd_pack(read_graph(input), k, p, parse_mode(mode), settings);
    } else if (verify_cmd->parsed()) {
      const Graph g = read_graph(input);
      hx::Json w;
      try {
        w = hx::Json::parse(read_source(witness_path));
      } catch (const hx::Json::exception& e) {
        throw turanpack::ParseError(std::string("witness is not JSON: ") + e.what());
      }
      rec = hx::cmd_verify(g, w, k, p, parse_mode(mode));
    } else if (oracle->parsed()) {
      rec = hx::cmd_oracle_ex(n, pattern, k, p);
    } else if (probe->parsed()) {
      rec = hx::cmd_probe_conjecture(pq, settings);
    } else if (color->parsed()) {
      rec = hx::cmd_color(read_graph(input), colors, exact);
    }
    if (timing) {
      rec.provenance.timestamp = utc_now();
      rec.provenance.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    std::string text;
    if (format == "csv") {
      if (!table->parsed()) throw turanpack::PreconditionError("--format csv applies to table only");
      text = hx::table_csv(rec);
    } else if (format == "graph6") {
      if (!construct->parsed())
        throw turanpack::PreconditionError("--format graph6 applies to construct only");
      text = graph6 + "\n";
    } else {
      text = rec.dump() + "\n";
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw turanpack::PreconditionError("cannot write \"" + output + "\"");
      out << text;
    }
    return kOk;
  } catch (const turanpack::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const turanpack::SoundnessAlarm& e) {
    std::cerr << "soundness alarm: " << e.what() << '\n';
    return kSoundness;
  } catch (const turanpack::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kPrecondition;
  } catch (const turanpack::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const turanpack::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  }
}
