#include "turanpack/formulas.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "turanpack/errors.hpp"

namespace turanpack::formulas {

using constructions::ConstructionRef;
using constructions::Family;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Keeps products of two parameters inside 64 bits.
constexpr std::int64_t kMaxParameter = (std::int64_t{1} << 31) - 1;

void bounded(std::initializer_list<std::int64_t> values) {
  for (auto v : values)
    if (v > kMaxParameter || v < -kMaxParameter)
      throw OverflowError("parameter " + std::to_string(v) + " exceeds 2^31 - 1");
}

ConstructionRef ref(Family f, constructions::ConstructionParams params) {
  return ConstructionRef{f, params};
}

TuranValue host_too_small(std::int64_t n) {
  // Every graph on n vertices avoids a pattern with more than n vertices.
  return TuranValue{choose2(n), Regime::pattern_larger_than_host,
                    ref(Family::clique_isolated, {.n = n, .a = n}), false};
}

TuranValue delegated(TuranValue v) {
  v.delegated_to_matchings = true;
  return v;
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::turan: return "turan";
    case Regime::pattern_larger_than_host: return "pattern-larger-than-host";
    case Regime::matching_small: return "matching-small";
    case Regime::matching_large: return "matching-large";
    case Regime::two_cliques_small: return "two-cliques-small";
    case Regime::two_cliques_large: return "two-cliques-large";
    case Regime::distinct_cliques_small: return "distinct-cliques-small";
    case Regime::distinct_cliques_large: return "distinct-cliques-large";
    case Regime::tight_clique_family: return "tight-clique-family";
    case Regime::tight_star_family: return "tight-star-family";
    case Regime::three_cliques_tight: return "three-cliques-tight";
    case Regime::three_cliques_middle: return "three-cliques-middle";
    case Regime::three_cliques_large: return "three-cliques-large";
    case Regime::four_cliques_tight: return "four-cliques-tight";
    case Regime::four_cliques_plus1: return "four-cliques-n=4p+1";
    case Regime::four_cliques_plus2: return "four-cliques-n=4p+2";
    case Regime::four_cliques_plus3: return "four-cliques-n=4p+3";
    case Regime::four_cliques_plus4: return "four-cliques-n=4p+4";
    case Regime::four_cliques_middle: return "four-cliques-middle";
    case Regime::four_cliques_large: return "four-cliques-large";
    case Regime::hub_extension: return "hub-extension";
  }
  return "unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t choose2(std::int64_t n) {
  if (n < 2) return 0;
  // One of n, n-1 is even; halve it first so the product stays in range longer.
  return n % 2 == 0 ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

std::int64_t turan_edges(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  require(p >= 1, "turan_edges requires p >= 1");
  require(n >= 0, "vertex count must be nonnegative");
  const std::int64_t q = n / p, r = n % p;
  const std::int64_t inside =
      checked_add(checked_mul(r, choose2(q + 1)), checked_mul(p - r, choose2(q)));
  return choose2(n) - inside;
}

TuranValue ex_single_clique(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  require(p >= 2, "ex(n, K_p) requires p >= 2");
  require(n >= 0, "vertex count must be nonnegative");
  TuranValue v{turan_edges(n, p - 1), Regime::turan,
               ref(Family::turan, {.n = n, .p = p - 1}), false};
  if (n < p) v.regime = Regime::pattern_larger_than_host;
  return v;
}

std::int64_t min_edges_alpha_bound(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  require(p >= 2, "independence bound requires p >= 2");
  require(n >= 0, "vertex count must be nonnegative");
  return choose2(n) - turan_edges(n, p - 1);
}

TuranValue ex_k_matchings(std::int64_t n, std::int64_t k) {
  bounded({n, k});
  require(k >= 1, "ex(n, kK_2) requires k >= 1");
  require(n >= 0, "vertex count must be nonnegative");
  if (n < 2 * k) return host_too_small(n);
  if (2 * n < 5 * k - 2)
    return TuranValue{choose2(2 * k - 1), Regime::matching_small,
                      ref(Family::clique_isolated, {.n = n, .p = 2, .k = k, .a = 2 * k - 1}),
                      false};
  return TuranValue{checked_add(choose2(k - 1), checked_mul(k - 1, n - k + 1)),
                    Regime::matching_large, ref(Family::hub_join, {.n = n, .p = 2, .k = k}),
                    false};
}

TuranValue ex_2_cliques(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  if (p == 2) return delegated(ex_k_matchings(n, 2));
  require(p >= 3, "ex(n, 2K_p) requires p >= 2");
  require(n >= 0, "vertex count must be nonnegative");
  if (n < 2 * p) return host_too_small(n);
  if (n <= 3 * p - 2)
    return TuranValue{choose2(n) - checked_mul(3, n - 2 * p + 1), Regime::two_cliques_small,
                      std::nullopt, false};
  return TuranValue{checked_add(n - 1, turan_edges(n - 1, p - 1)), Regime::two_cliques_large,
                    ref(Family::hub_join, {.n = n, .p = p, .k = 2}), false};
}

TuranValue ex_two_distinct_cliques(std::int64_t n, std::int64_t p, std::int64_t q) {
  bounded({n, p, q});
  require(p >= 3 && q > p, "ex(n, K_p u K_q) requires q > p >= 3");
  require(n >= 0, "vertex count must be nonnegative");
  if (n < p + q) return host_too_small(n);
  const std::int64_t threshold = p + q + std::max(2 * p - q, p / 2 - 1);
  if (n <= threshold)
    return TuranValue{choose2(n) - checked_mul(3, n - p - q + 1), Regime::distinct_cliques_small,
                      std::nullopt, false};
  return TuranValue{turan_edges(n, q - 1), Regime::distinct_cliques_large,
                    ref(Family::turan, {.n = n, .p = q - 1}), false};
}

TuranValue ex_tight_k_cliques(std::int64_t k, std::int64_t p) {
  bounded({k, p});
  require(k >= 1, "ex(kp, kK_p) requires k >= 1");
  if (p == 2) return delegated(ex_k_matchings(2 * k, k));
  require(p >= 3, "ex(kp, kK_p) requires p >= 2");
  const std::int64_t n = checked_mul(k, p);
  if (k <= 2 * p - 2)
    return TuranValue{choose2(n) - choose2(k + 1), Regime::tight_clique_family,
                      ref(Family::tight_clique, {.n = n, .p = p, .k = k}), false};
  const std::int64_t x = n - p + 1;
  return TuranValue{choose2(n) - (n - p + 1), Regime::tight_star_family,
                    ref(Family::tight_star, {.n = n, .p = p, .k = k, .x = x}), false};
}

TuranValue ex_3_cliques(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  if (p == 2) return delegated(ex_k_matchings(n, 3));
  require(p >= 3, "ex(n, 3K_p) requires p >= 2");
  require(n >= 0, "vertex count must be nonnegative");
  if (n < 3 * p) return host_too_small(n);
  if (n == 3 * p) {
    TuranValue v = ex_tight_k_cliques(3, p);
    v.regime = Regime::three_cliques_tight;
    return v;
  }
  if (n <= 5 * p - 2)
    return TuranValue{choose2(n) - checked_mul(5, n - 3 * p + 1), Regime::three_cliques_middle,
                      std::nullopt, false};
  return TuranValue{hub_expression(n, 3, p), Regime::three_cliques_large,
                    ref(Family::hub_join, {.n = n, .p = p, .k = 3}), false};
}

TuranValue ex_4_cliques(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  if (p == 2) return delegated(ex_k_matchings(n, 4));
  require(p >= 3, "ex(n, 4K_p) requires p >= 2");
  require(n >= 0, "vertex count must be nonnegative");
  if (n < 4 * p) return host_too_small(n);
  const std::int64_t all = choose2(n);
  auto witness = [&](Family f) { return ref(f, {.n = n, .p = p}); };
  switch (n - 4 * p) {
    case 0: {
      TuranValue v = ex_tight_k_cliques(4, p);
      v.regime = Regime::four_cliques_tight;
      return v;
    }
    case 1: return TuranValue{all - 15, Regime::four_cliques_plus1, witness(Family::witness_g1), false};
    case 2: return TuranValue{all - 21, Regime::four_cliques_plus2, witness(Family::witness_g2), false};
    case 3: return TuranValue{all - 28, Regime::four_cliques_plus3, witness(Family::witness_g3), false};
    case 4:
      if (p == 3)
        return TuranValue{all - 35, Regime::four_cliques_plus4, witness(Family::witness_g4), false};
      return TuranValue{all - 36, Regime::four_cliques_plus4, witness(Family::witness_g5), false};
    default: break;
  }
  if (n <= 7 * p - 2) {
    const std::int64_t s = n - 4 * p + 1;
    return TuranValue{all - checked_mul(7, s), Regime::four_cliques_middle,
                      ref(Family::j_graph, {.n = n, .p = p, .s = s}), false};
  }
  return TuranValue{hub_expression(n, 4, p), Regime::four_cliques_large,
                    ref(Family::hub_join, {.n = n, .p = p, .k = 4}), false};
}

std::int64_t f_3_independent(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  require(p >= 3, "f(n, 3 independent p-sets) requires p >= 3");
  const std::int64_t s = n - 3 * p + 1;
  require(s >= 1 && s <= 2 * p - 1,
          "f(n, 3 independent p-sets) requires n = 3p - 1 + s with 1 <= s <= 2p - 1");
  return s == 1 ? 6 : 5 * s;
}

TuranValue extend_hub_value(std::int64_t n0, std::int64_t k, std::int64_t p,
                            std::int64_t verified_value, std::int64_t n) {
  bounded({n0, k, p, n});
  require(p >= 3 && k >= 2, "hub extension requires p >= 3 and k >= 2");
  require(n0 >= checked_mul(k, p), "hub extension requires n0 >= kp");
  require(n >= n0, "hub extension only propagates upward from n0");
  const std::int64_t expected = hub_expression(n0, k, p);
  if (verified_value != expected)
    throw PreconditionError("verified value " + std::to_string(verified_value) +
                            " does not equal e(K_{k-1} v T(n0-k+1, p-1)) = " +
                            std::to_string(expected));
  return TuranValue{hub_expression(n, k, p), Regime::hub_extension,
                    ref(Family::hub_join, {.n = n, .p = p, .k = k}), false};
}

std::int64_t hub_expression(std::int64_t n, std::int64_t k, std::int64_t p) {
  bounded({n, k, p});
  require(k >= 1 && p >= 2, "hub expression requires k >= 1 and p >= 2");
  require(n >= k - 1, "hub expression requires n >= k - 1");
  return checked_add(checked_add(choose2(k - 1), turan_edges(n - k + 1, p - 1)),
                     checked_mul(k - 1, n - k + 1));
}

std::int64_t four_cliques_quoted_large_form(std::int64_t n, std::int64_t p) {
  bounded({n, p});
  require(p >= 2 && n >= 3, "quoted form requires p >= 2 and n >= 3");
  return checked_add(checked_add(3, checked_mul(3, n - 1)), turan_edges(n - 3, p - 1));
}

}  // namespace turanpack::formulas
