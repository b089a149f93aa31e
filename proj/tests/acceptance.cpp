// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "turanpack/constructions.hpp"
#include "turanpack/errors.hpp"
#include "turanpack/formulas.hpp"
#include "turanpack/harness.hpp"
#include "turanpack/packing.hpp"
#include "turanpack/shifting.hpp"

using namespace turanpack;
namespace hx = turanpack::harness;

namespace {

std::int64_t c2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t t(std::int64_t n, std::int64_t p) {
  std::int64_t e = c2(n);
  for (std::int64_t i = 0; i < p; ++i) e -= c2(n / p + (i < n % p ? 1 : 0));
  return e;
}

// The piecewise values for ex(n, 4K_p), n >= 4p, with the large-n branch
// taken as the count of K_3 v T(n-3, p-1).
std::int64_t four_cliques_reference(std::int64_t n, std::int64_t p) {
  if (n == 4 * p) return c2(n) - 10;
  if (n == 4 * p + 1) return c2(n) - 15;
  if (n == 4 * p + 2) return c2(n) - 21;
  if (n == 4 * p + 3) return c2(n) - 28;
  if (n == 4 * p + 4) return c2(n) - (p == 3 ? 35 : 36);
  if (n <= 7 * p - 2) return c2(n) - 7 * (n - 4 * p + 1);
  return 3 + 3 * (n - 3) + t(n - 3, p - 1);
}

std::string expected_family(std::int64_t n, std::int64_t p) {
  if (n == 4 * p) return "tight-A";
  if (n == 4 * p + 1) return "G1";
  if (n == 4 * p + 2) return "G2";
  if (n == 4 * p + 3) return "G3";
  if (n == 4 * p + 4) return p == 3 ? "G4" : "G5";
  if (n <= 7 * p - 2) return "J";
  return "hub-join";
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Graph k7_blocks(int blocks, int n) {
  std::vector<Graph> parts(blocks, Graph::complete(7));
  parts.push_back(Graph::empty(n - 7 * blocks));
  return disjoint_union(parts);
}

Graph drop_edge(const Graph& g, std::mt19937_64& rng) {
  const auto es = g.edges();
  const auto victim = es[rng() % es.size()];
  GraphBuilder b(g.order());
  for (const auto& e : es)
    if (e != victim) b.add_edge(e.first, e.second);
  return std::move(b).build();
}

Verdict grid() {
  Verdict v;
  int rows = 0, verified = 0;
  for (int p = 3; p <= 5; ++p) {
    const auto table = hx::cmd_table({"4Kp", 4 * p, 7 * p + 6, p, p, true}, hx::Settings{});
    for (const auto& row : table.payload.at("rows")) {
      const auto n = row.at("n").get<std::int64_t>();
      ++rows;
      if (row.at("value").get<std::int64_t>() != four_cliques_reference(n, p))
        v.fail("value mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p));
      const auto family = expected_family(n, p);
      if (row.at("construction").is_null() || row.at("construction") != family) {
        v.fail("missing or unexpected construction at n=" + std::to_string(n) + " p=" + std::to_string(p));
        continue;
      }
      if (row.at("verified") != true)
        v.fail("construction not confirmed at n=" + std::to_string(n) + " p=" + std::to_string(p));
      else
        ++verified;
    }
  }
  if (v.pass)
    v.detail = std::to_string(rows) + " rows, " + std::to_string(verified) +
               " constructions confirmed 4K_p-free with exact edge counts";
  return v;
}

Verdict j_graphs() {
  Verdict v;
  int built = 0, brute = 0;
  for (int p = 3; p <= 5; ++p) {
    std::set<int> undefined;
    for (int s = 1; s <= 3 * p - 1; ++s) {
      Graph g;
      try {
        g = constructions::j_graph(p, s);
      } catch (const PreconditionError&) {
        undefined.insert(s);
        continue;
      }
      ++built;
      if (g.size() != 7 * s) v.fail("e(J) != 7s at p=" + std::to_string(p) + " s=" + std::to_string(s));
      if (packing::find_disjoint_independent_sets(g, 4, p))
        v.fail("J contains four independent p-sets at p=" + std::to_string(p) + " s=" + std::to_string(s));
      if (g.order() <= 20) {
        ++brute;
        if (oracle::has_disjoint_independent_sets(g, 4, p)) v.fail("brute force disagrees on J");
      }
    }
    if (undefined != std::set<int>{1, 2, 5}) v.fail("J undefined for an unexpected s at p=" + std::to_string(p));
  }
  if (v.pass)
    v.detail = std::to_string(built) + " J graphs: e = 7s and no four independent p-sets (" +
               std::to_string(brute) + " also by brute force); undefined exactly for s in {1,2,5}";
  return v;
}

Verdict dichotomy() {
  Verdict v;
  std::mt19937_64 rng(hx::kDefaultSeed);
  long long random_total = 0, planted_total = 0, witnesses = 0, certificates = 0, alarms = 0;
  int cross_checked = 0;
  for (int p : {3, 4}) {
    for (int s = 3; s <= 8; ++s) {
      const int n = 4 * p - 1 + s;
      std::vector<Graph> instances;
      // Planted instances first: exact K_7 unions and their one-edge deletions.
      for (int i = 0; i < 100; ++i) {
        const int blocks = std::min(s / 3, n / 7);
        Graph g = k7_blocks(blocks, n);
        if (i % 2 == 1 || s % 3 != 0) g = drop_edge(g, rng);
        instances.push_back(std::move(g));
      }
      planted_total += 100;
      for (int i = 0; i < 1000; ++i) instances.push_back(hx::sample_bounded_graph(rng, n, 7LL * s, 6));
      random_total += 1000;
      for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& g = instances[i];
        if (g.max_degree() > 6 || g.size() > 7LL * s) {
          v.fail("sampler produced an out-of-range instance");
          continue;
        }
        shifting::ResolveResult r;
        try {
          r = shifting::resolve(g, p);
        } catch (const SoundnessAlarm& e) {
          ++alarms;
          v.fail(std::string("soundness alarm: ") + e.what());
          continue;
        }
        bool found = r.is_witness();
        if (found) {
          ++witnesses;
          if (!packing::verify_witness(g, std::get<packing::PackingWitness>(r.outcome), 4, p,
                                       packing::Mode::independent)
                   .ok())
            v.fail("unverified witness");
        } else {
          ++certificates;
          if (!shifting::verify_certificate(g, p, std::get<shifting::StructureCertificate>(r.outcome)))
            v.fail("unverified certificate");
          if (g.size() != 7LL * s || s % 3 != 0) v.fail("certificate outside e = 7s, 3 | s");
        }
        // Brute-force cross-check on the first planted and random instances
        // of every host small enough for enumeration.
        const bool sample = n <= 20 && (i < 6 || (i >= 100 && i < 106));
        if (sample) {
          ++cross_checked;
          if (oracle::has_disjoint_independent_sets(g, 4, p) != found) v.fail("brute force disagrees");
        }
      }
    }
  }
  if (cross_checked < 100) v.fail("only " + std::to_string(cross_checked) + " brute-force cross-checks");
  if (v.pass)
    v.detail = std::to_string(random_total) + " random + " + std::to_string(planted_total) + " planted: " +
               std::to_string(witnesses) + " witnesses, " + std::to_string(certificates) +
               " certificates, all verified; " + std::to_string(alarms) + " alarms; " +
               std::to_string(cross_checked) + " brute-force agreements";
  return v;
}

Verdict boundary() {
  Verdict v;
  for (int p = 3; p <= 10; ++p) {
    const std::int64_t n = 7 * p - 2;
    const std::int64_t left = c2(n) - 7 * (3 * p - 1);
    const std::int64_t right = 3 + 3 * (n - 3) + t(n - 3, p - 1);
    const auto built = constructions::hub_join(4, static_cast<int>(n), p).size();
    if (left != right || left != built || left != formulas::hub_expression(n, 4, p) ||
        left != c2(n) - 21 * p + 7)
      v.fail("identity fails at p=" + std::to_string(p));
  }
  if (v.pass) v.detail = "C(7p-2,2) - 7(3p-1) = e(K_3 v T(7p-5,p-1)) for p = 3..10";
  return v;
}

Verdict discrepancy() {
  Verdict v;
  int checked = 0;
  for (int p = 3; p <= 10; ++p) {
    for (std::int64_t n = 7 * p - 1; n <= 7 * p + 40; ++n, ++checked) {
      const auto value = formulas::ex_4_cliques(n, p).value;
      const auto construction = 3 + 3 * (n - 3) + t(n - 3, p - 1);
      const auto quoted = 3 + 3 * (n - 1) + t(n - 3, p - 1);
      if (value != construction) v.fail("large-n value is not the construction count");
      if (quoted - value != 6 || formulas::four_cliques_quoted_large_form(n, p) != quoted)
        v.fail("quoted form does not differ by exactly 6");
    }
    const std::int64_t b = 7 * p - 2;
    if (3 + 3 * (b - 3) + t(b - 3, p - 1) != c2(b) - 7 * (3 * p - 1)) v.fail("no agreement at n = 7p - 2");
    const auto table = hx::cmd_table({"4Kp", 7 * p - 2, 7 * p + 2, p, p, false}, hx::Settings{});
    for (const auto& row : table.payload.at("rows")) {
      const bool large = row.at("n").get<std::int64_t>() >= 7 * p - 1;
      const auto note = row.at("note").get<std::string>();
      if (large != (note.find("by 6") != std::string::npos)) v.fail("table note missing or misplaced");
    }
  }
  if (v.pass)
    v.detail = std::to_string(checked) + " (n,p) pairs: value = 3+3(n-3)+t(n-3,p-1), quoted form +6, "
                                         "boundary agrees, table rows flagged";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  int cases = 0;
  for (int n = 1; n <= hx::kOracleMaxN; ++n) {
    const struct {
      const char* pattern;
      int k, p;
      std::int64_t formula;
    } checks[] = {
        {"Kp", 0, 3, formulas::ex_single_clique(n, 3).value},
        {"kK2", 2, 0, formulas::ex_k_matchings(n, 2).value},
        {"kK2", 3, 0, formulas::ex_k_matchings(n, 3).value},
        {"Kp", 0, 2, formulas::ex_single_clique(n, 2).value},
    };
    for (const auto& c : checks) {
      ++cases;
      const auto r = hx::cmd_oracle_ex(n, c.pattern, c.k, c.p);
      if (r.payload.at("value").get<std::int64_t>() != c.formula)
        v.fail(std::string("oracle disagrees for ") + c.pattern + " at n=" + std::to_string(n));
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " cases (K_3, 2K_2, 3K_2, K_2; n = 1..7) match exactly";
  return v;
}

Verdict lattice() {
  Verdict v;
  int checks = 0;
  for (int p = 3; p <= 8; ++p) {
    ++checks;
    if (formulas::ex_3_cliques(3 * p, p).value != formulas::ex_tight_k_cliques(3, p).value)
      v.fail("3p tight mismatch");
    ++checks;
    if (formulas::ex_4_cliques(4 * p, p).value != formulas::ex_tight_k_cliques(4, p).value)
      v.fail("4p tight mismatch");
    for (int n = 3 * p + 1; n <= 5 * p - 2; ++n, ++checks)
      if (c2(n) - formulas::ex_3_cliques(n, p).value != formulas::f_3_independent(n, p))
        v.fail("f3 mismatch at n=" + std::to_string(n));
    for (int n = 3 * p - 1; n <= 3 * p + 40; ++n, ++checks)
      if (formulas::ex_2_cliques(n, p).value != t(n - 1, p - 1) + (n - 1))
        v.fail("2K_p large-n mismatch at n=" + std::to_string(n));
  }
  if (v.pass) v.detail = std::to_string(checks) + " identities hold for p = 3..8";
  return v;
}

Verdict coloring() {
  Verdict v;
  std::mt19937_64 rng(hx::kDefaultSeed + 8);
  int done = 0;
  for (int i = 0; i < 1000; ++i) {
    const int r = 2 + i % 7;
    const int n = 1 + static_cast<int>(rng() % 200);
    const auto g = hx::sample_bounded_graph(rng, n, static_cast<long long>(n) * r, r);
    const auto c = packing::equitable_coloring(g, r + 1);
    std::vector<int> color(n, -1);
    bool ok = static_cast<int>(c.classes.size()) == r + 1;
    int lo = n, hi = 0;
    for (int k = 0; k < static_cast<int>(c.classes.size()); ++k) {
      lo = std::min(lo, c.classes[k].size());
      hi = std::max(hi, c.classes[k].size());
      for (Vertex x : c.classes[k].to_vector()) {
        ok = ok && color[x] < 0;
        color[x] = k;
      }
    }
    for (int x = 0; x < n; ++x) ok = ok && color[x] >= 0;
    for (const auto& [a, b] : g.edges()) ok = ok && color[a] != color[b];
    ok = ok && hi - lo <= 1;
    if (!ok) v.fail("bad coloring for instance " + std::to_string(i));
    else ++done;
  }
  if (v.pass) v.detail = std::to_string(done) + "/1000 proper equitable (r+1)-colorings, r = 2..8, n <= 200";
  return v;
}

Verdict scope_note(bool others_passed) {
  Verdict v;
  bool refused = false;
  try {
    hx::cmd_oracle_ex(hx::kOracleMaxN + 1, "Kp", 0, 3);
  } catch (const SizeGuardError&) {
    refused = true;
  }
  if (!refused) v.fail("oracle did not refuse n = 8");
  if (!others_passed) v.fail("a supporting suite failed");
  if (v.pass)
    v.detail = "general n is out of exhaustive reach (oracle refuses n = 8); coverage rests on criteria 1-8, all passing";
  return v;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const Entry entries[] = {
      {1, "4K_p piecewise grid with construction checks", grid},
      {2, "J graphs", j_graphs},
      {3, "resolve dichotomy", dichotomy},
      {4, "boundary identity", boundary},
      {5, "large-n closed-form discrepancy", discrepancy},
      {6, "brute-force oracle agreement", oracle_agreement},
      {7, "consistency lattice", lattice},
      {8, "equitable coloring", coloring},
  };
  bool all = true;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = e.run();
    } catch (const std::exception& ex) {
      v.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", e.id, e.name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  const auto note = scope_note(all);
  std::printf("%s criterion 9 (scope of verification): %s\n", note.pass ? "PASS" : "FAIL", note.detail.c_str());
  return all && note.pass ? 0 : 1;
}
