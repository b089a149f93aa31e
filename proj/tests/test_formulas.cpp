#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>

#include "oracles.hpp"
#include "turanpack/errors.hpp"
#include "turanpack/formulas.hpp"
#include "turanpack/graph.hpp"

using namespace turanpack;
using namespace turanpack::formulas;

namespace {

std::int64_t c2(std::int64_t n) { return n * (n - 1) / 2; }

// Maximum cross edges over every assignment of n labeled vertices to p parts.
std::int64_t brute_turan(int n, int p) {
  std::vector<int> part(n, 0);
  std::int64_t best = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      std::vector<std::int64_t> sizes(p, 0);
      for (int x : part) ++sizes[x];
      std::int64_t inside = 0;
      for (auto s : sizes) inside += c2(s);
      best = std::max(best, c2(n) - inside);
      return;
    }
    for (int x = 0; x < p; ++x) {
      part[v] = x;
      go(v + 1);
    }
  };
  go(0);
  return best;
}

// Balanced-part count, written independently of the library.
std::int64_t t(std::int64_t n, std::int64_t p) {
  std::int64_t e = c2(n);
  for (std::int64_t i = 0; i < p; ++i) e -= c2(n / p + (i < n % p ? 1 : 0));
  return e;
}

// Minimum edges over all graphs on n vertices with independence number < p.
int brute_min_edges_alpha(int n, int p) {
  oracle::PairIndex idx(n);
  const int m = static_cast<int>(idx.pairs.size());
  int best = m;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int e = std::popcount(mask);
    if (e >= best) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(idx.pairs[i]);
    if (oracle::independent_p_sets(Graph::from_edges(n, edges), p).empty()) best = e;
  }
  return best;
}

}  // namespace

TEST_CASE("turan edge counts") {
  CHECK(turan_edges(5, 2) == 6);
  CHECK(turan_edges(9, 3) == 27);
  CHECK(turan_edges(9, 3) == brute_turan(9, 3));
  for (int n = 0; n <= 8; ++n) {
    CHECK(turan_edges(n, 1) == 0);
    for (int p = 1; p <= 4; ++p) CHECK(turan_edges(n, p) == brute_turan(n, p));
  }
  CHECK(turan_edges(1000003, 7) == t(1000003, 7));
}

TEST_CASE("checked arithmetic") {
  CHECK(choose2(4000000000LL) == 7999999998000000000LL);
  CHECK_THROWS_AS(choose2(5000000000LL), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
}

TEST_CASE("single clique") {
  CHECK(ex_single_clique(5, 3).value == 6);
  CHECK(ex_single_clique(4, 2).value == 0);
  CHECK(ex_single_clique(9, 4).value == 27);
  for (int n = 1; n <= 7; ++n)
    for (int p = 2; p <= 4; ++p) CHECK(ex_single_clique(n, p).value == oracle::exhaustive_ex(n, 1, p));
}

TEST_CASE("minimum edges forcing small independence number") {
  CHECK(min_edges_alpha_bound(5, 3) == 4);
  CHECK(min_edges_alpha_bound(7, 3) == 9);
  CHECK(min_edges_alpha_bound(2, 3) == 0);
  for (int n = 1; n <= 6; ++n)
    for (int p = 2; p <= 4; ++p) CHECK(min_edges_alpha_bound(n, p) == brute_min_edges_alpha(n, p));
}

TEST_CASE("matchings") {
  CHECK(ex_k_matchings(6, 3).value == 10);
  CHECK(ex_k_matchings(4, 2).value == 3);
  CHECK(ex_k_matchings(5, 1).value == 0);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k) CHECK(ex_k_matchings(n, k).value == oracle::exhaustive_ex(n, k, 2));
}

TEST_CASE("two cliques") {
  CHECK(ex_2_cliques(7, 3).value == 15);
  CHECK(ex_2_cliques(9, 3).value == 24);
  CHECK(ex_2_cliques(6, 3).value == 12);
  CHECK(ex_2_cliques(6, 3).value == oracle::exhaustive_ex(6, 2, 3));
  CHECK(ex_2_cliques(7, 3).value == oracle::exhaustive_ex(7, 2, 3));
  for (int p = 3; p <= 8; ++p)
    for (int n = 3 * p - 1; n <= 3 * p + 20; ++n)
      CHECK(ex_2_cliques(n, p).value == t(n - 1, p - 1) + (n - 1));
}

TEST_CASE("two distinct cliques") {
  CHECK(ex_two_distinct_cliques(7, 3, 4).value == 18);
  CHECK(ex_two_distinct_cliques(10, 3, 4).value == 33);
  CHECK(ex_two_distinct_cliques(8, 3, 5).value == 25);
  // n = 7 is the only host within exhaustive reach.
  CHECK(ex_two_distinct_cliques(7, 3, 4).value == oracle::exhaustive_ex_union(7, 3, 4));
  CHECK(ex_two_distinct_cliques(6, 3, 4).value == 15);
  CHECK_THROWS_AS(ex_two_distinct_cliques(10, 4, 4), PreconditionError);
  CHECK_THROWS_AS(ex_two_distinct_cliques(10, 2, 4), PreconditionError);
}

TEST_CASE("tight host n = kp") {
  CHECK(ex_tight_k_cliques(4, 3).value == 56);
  CHECK(ex_tight_k_cliques(5, 3).value == 92);
  CHECK(ex_tight_k_cliques(1, 3).value == 2);
  CHECK(ex_tight_k_cliques(1, 3).value == oracle::exhaustive_ex(3, 1, 3));
  CHECK(ex_tight_k_cliques(2, 3).value == oracle::exhaustive_ex(6, 2, 3));
  CHECK(ex_tight_k_cliques(3, 2).value == oracle::exhaustive_ex(6, 3, 2));
  CHECK(ex_tight_k_cliques(3, 2).delegated_to_matchings);
  CHECK(ex_tight_k_cliques(4, 3).regime == Regime::tight_clique_family);
  CHECK(ex_tight_k_cliques(5, 3).regime == Regime::tight_star_family);
  for (int p = 3; p <= 8; ++p)
    for (int k = 1; k <= 3 * p; ++k) {
      const std::int64_t n = k * p;
      const std::int64_t expected = k <= 2 * p - 2 ? c2(n) - c2(k + 1) : c2(n) - (n - p + 1);
      CHECK(ex_tight_k_cliques(k, p).value == expected);
    }
}

TEST_CASE("three cliques") {
  CHECK(ex_3_cliques(9, 3).value == 30);
  CHECK(ex_3_cliques(10, 3).value == 35);
  CHECK(ex_3_cliques(14, 3).value == 61);
  CHECK(ex_3_cliques(6, 2).value == oracle::exhaustive_ex(6, 3, 2));
  for (int p = 3; p <= 8; ++p)
    for (int n = 3 * p; n <= 5 * p + 10; ++n) {
      std::int64_t expected = 0;
      if (n == 3 * p) expected = c2(n) - 6;
      else if (n <= 5 * p - 2) expected = c2(n) - 5 * (n - 3 * p + 1);
      else expected = 1 + 2 * (n - 2) + t(n - 2, p - 1);
      CHECK(ex_3_cliques(n, p).value == expected);
    }
}

TEST_CASE("four cliques") {
  CHECK(ex_4_cliques(16, 3).value == 85);
  CHECK(ex_4_cliques(13, 3).value == 63);
  CHECK(ex_4_cliques(19, 3).value == 115);
  CHECK(ex_4_cliques(20, 4).value == 154);
  for (int p = 3; p <= 10; ++p)
    for (int n = 4 * p; n <= 7 * p + 12; ++n) {
      std::int64_t expected = 0;
      if (n == 4 * p) expected = c2(n) - 10;
      else if (n == 4 * p + 1) expected = c2(n) - 15;
      else if (n == 4 * p + 2) expected = c2(n) - 21;
      else if (n == 4 * p + 3) expected = c2(n) - 28;
      else if (n == 4 * p + 4) expected = c2(n) - (p == 3 ? 35 : 36);
      else if (n <= 7 * p - 2) expected = c2(n) - 7 * (n - 4 * p + 1);
      else expected = 3 + 3 * (n - 3) + t(n - 3, p - 1);
      CHECK(ex_4_cliques(n, p).value == expected);
      if (n >= 7 * p - 1) {
        CHECK(ex_4_cliques(n, p).regime == Regime::four_cliques_large);
        CHECK(four_cliques_quoted_large_form(n, p) - ex_4_cliques(n, p).value == 6);
      }
    }
}

TEST_CASE("hosts smaller than the pattern") {
  CHECK(ex_4_cliques(11, 3).value == c2(11));
  CHECK(ex_4_cliques(11, 3).regime == Regime::pattern_larger_than_host);
  CHECK(ex_3_cliques(0, 3).value == 0);
  CHECK(ex_2_cliques(5, 3).value == 10);
}

TEST_CASE("three independent sets") {
  CHECK(f_3_independent(9, 3) == 6);
  CHECK(f_3_independent(11, 3) == 15);
  for (int p = 3; p <= 8; ++p)
    for (int n = 3 * p + 1; n <= 5 * p - 2; ++n) CHECK(f_3_independent(n, p) == c2(n) - ex_3_cliques(n, p).value);
  CHECK_THROWS_AS(f_3_independent(8, 3), PreconditionError);
  CHECK_THROWS_AS(f_3_independent(14, 3), PreconditionError);
}

TEST_CASE("hub expression and its extension") {
  CHECK(hub_expression(19, 4, 3) == 115);
  CHECK(hub_expression(14, 3, 3) == 61);
  CHECK(extend_hub_value(19, 4, 3, 115, 20).value == 126);
  CHECK(extend_hub_value(14, 3, 3, 61, 14).value == 61);
  CHECK(extend_hub_value(19, 4, 3, 115, 19).value == 115);
  CHECK(extend_hub_value(19, 4, 3, 115, 20).regime == Regime::hub_extension);
  CHECK_THROWS_AS(extend_hub_value(19, 4, 3, 114, 20), PreconditionError);
  CHECK_THROWS_AS(extend_hub_value(19, 4, 3, 115, 18), PreconditionError);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(ex_single_clique(5, 1), PreconditionError);
  CHECK_THROWS_AS(ex_single_clique(-1, 3), PreconditionError);
  CHECK_THROWS_AS(ex_k_matchings(5, 0), PreconditionError);
  CHECK_THROWS_AS(ex_4_cliques(20, 1), PreconditionError);
}

TEST_CASE("every construction reference matches its value") {
  for (int p = 3; p <= 6; ++p)
    for (int n = 4 * p; n <= 7 * p + 4; ++n) {
      const auto v = ex_4_cliques(n, p);
      if (!v.construction) continue;
      const auto c = constructions::build(*v.construction);
      CHECK(constructions::extremal_edges(c.descriptor) == v.value);
      CHECK(c.graph.order() == n);
    }
}
