#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "turanpack/constructions.hpp"

namespace turanpack::formulas {

// Which piecewise branch produced a value.
enum class Regime {
  turan,                     // ex(n, K_p) = t(n, p-1)
  pattern_larger_than_host,  // n below the pattern's order: every graph qualifies
  matching_small,            // 2k <= n < 5k/2 - 1
  matching_large,            // n >= 5k/2 - 1
  two_cliques_small,         // 2p <= n <= 3p - 2
  two_cliques_large,         // n >= 3p - 1
  distinct_cliques_small,
  distinct_cliques_large,
  tight_clique_family,       // n = kp, k <= 2p - 2
  tight_star_family,         // n = kp, k >= 2p - 1
  three_cliques_tight,       // n = 3p
  three_cliques_middle,      // 3p + 1 <= n <= 5p - 2
  three_cliques_large,       // n >= 5p - 1
  four_cliques_tight,        // n = 4p
  four_cliques_plus1,
  four_cliques_plus2,
  four_cliques_plus3,
  four_cliques_plus4,
  four_cliques_middle,       // 4p + 5 <= n <= 7p - 2
  four_cliques_large,        // n >= 7p - 1
  hub_extension,             // e(K_{k-1} v T(n-k+1, p-1)) propagated from a verified n0
};

std::string_view regime_name(Regime r);

/// Result of a closed-form Turán evaluation. When `construction` is present,
/// the extremal graph it names (see constructions::extremal_graph) has exactly
/// `value` edges.
struct TuranValue {
  std::int64_t value = 0;
  Regime regime = Regime::turan;
  std::optional<constructions::ConstructionRef> construction;
  bool delegated_to_matchings = false;

  friend bool operator==(const TuranValue&, const TuranValue&) = default;
};

// Checked helpers; throw OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t choose2(std::int64_t n);

/// t(n, p): edges of the balanced complete p-partite graph on n vertices.
std::int64_t turan_edges(std::int64_t n, std::int64_t p);

TuranValue ex_single_clique(std::int64_t n, std::int64_t p);
/// Minimum edge count of an n-vertex graph with independence number < p.
std::int64_t min_edges_alpha_bound(std::int64_t n, std::int64_t p);
TuranValue ex_k_matchings(std::int64_t n, std::int64_t k);
TuranValue ex_2_cliques(std::int64_t n, std::int64_t p);
TuranValue ex_two_distinct_cliques(std::int64_t n, std::int64_t p, std::int64_t q);
TuranValue ex_tight_k_cliques(std::int64_t k, std::int64_t p);
TuranValue ex_3_cliques(std::int64_t n, std::int64_t p);
TuranValue ex_4_cliques(std::int64_t n, std::int64_t p);

/// Minimum edges of a graph on n = 3p - 1 + s vertices with no three disjoint
/// independent p-sets, 1 <= s <= 2p - 1.
std::int64_t f_3_independent(std::int64_t n, std::int64_t p);

/// Once ex(n0, kK_p) is known to equal e(K_{k-1} v T(n0-k+1, p-1)), the same
/// hub construction stays extremal for every n >= n0. `verified_value` must be
/// that edge count at n0.
TuranValue extend_hub_value(std::int64_t n0, std::int64_t k, std::int64_t p,
                            std::int64_t verified_value, std::int64_t n);

/// C(k-1,2) + t(n-k+1, p-1) + (k-1)(n-k+1): the large-n expression for
/// ex(n, kK_p). Only a cross-check; no threshold is claimed.
std::int64_t hub_expression(std::int64_t n, std::int64_t k, std::int64_t p);

/// The frequently quoted large-n form 3 + 3(n-1) + t(n-3, p-1) for
/// ex(n, 4K_p). It overcounts the hub construction K_3 v T(n-3, p-1) by
/// exactly 6 and is kept only so tables can flag the difference.
std::int64_t four_cliques_quoted_large_form(std::int64_t n, std::int64_t p);

}  // namespace turanpack::formulas
