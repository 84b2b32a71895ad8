#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dbe/errors.hpp"

namespace dbe {

inline long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Exact ceiling division for a >= 0, b >= 1. Never routes through floating
/// point.
inline long long ceil_div(long long a, long long b) {
  return (a + b - 1) / b;
}

inline void check_triple(long long n, long long p, long long k) {
  if (p < 2) throw illegal_triple("p >= 2 violated (p = " + std::to_string(p) + ")");
  if (p > n - 1)
    throw illegal_triple("p <= n-1 violated (n = " + std::to_string(n) +
                         ", p = " + std::to_string(p) + ")");
  if (k < 1) throw illegal_triple("k >= 1 violated (k = " + std::to_string(k) + ")");
  if (2 * k > p)
    throw illegal_triple("k <= p/2 violated (p = " + std::to_string(p) +
                         ", k = " + std::to_string(k) + ")");
}

/// Lower bound on the number of distinct lines of a graph built from a
/// bipartite base by twin splits, given n vertices of which p sit in rich
/// blobs and k rich blobs have a trivial neighbour:
///
///   C(p,2) + C(ceil((n-p)/k), 2) + 2k
///
/// in exact integer arithmetic.
inline long long lower_bound_on_lines(long long n, long long p, long long k) {
  check_triple(n, p, k);
  return choose2(p) + choose2(ceil_div(n - p, k)) + 2 * k;
}

struct bound_triple {
  long long n = 0, p = 0, k = 0;
  long long bound = 0;
};

struct sweep_report {
  long long n_min = 0, n_max = 0;
  bool include_slack = true;
  long long triples_checked = 0;
  std::vector<bound_triple> failures;  // triples whose bound falls below n

  bool passed() const { return failures.empty(); }
};

/// Check bound >= n over every legal triple with n_min <= n <= n_max.
/// With include_slack false the additive 2k term is dropped, exposing the
/// triples that need it. Failures are report content, never exceptions.
inline sweep_report triple_sweep(long long n_min, long long n_max,
                                 bool include_slack = true) {
  if (n_min < 3 || n_min > n_max)
    throw bad_parameter("sweep range must satisfy 3 <= n_min <= n_max");
  sweep_report rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  rep.include_slack = include_slack;
  for (long long n = n_min; n <= n_max; ++n) {
    for (long long p = 2; p <= n - 1; ++p) {
      for (long long k = 1; 2 * k <= p; ++k) {
        ++rep.triples_checked;
        long long bound = choose2(p) + choose2(ceil_div(n - p, k));
        if (include_slack) bound += 2 * k;
        if (bound < n) rep.failures.push_back({n, p, k, bound});
      }
    }
  }
  return rep;
}

/// Parameters of the closed-form case analysis: it applies from n0 vertices
/// on, with threshold coefficient epsilon.
inline constexpr double default_epsilon = 1.531;
inline constexpr long long case_analysis_n0 = 40;

/// Which summand of the bound carries the proof for a given (n, p): the
/// first term alone when p is large, the second alone when p is small, and
/// both halves in the middle band.
enum class bound_case { first_term, second_term, both_terms };

inline const char* to_string(bound_case c) {
  switch (c) {
    case bound_case::first_term: return "first_term";
    case bound_case::second_term: return "second_term";
    default: return "both_terms";
  }
}

inline bound_case classify_case(long long n, long long p, double epsilon) {
  if (n < case_analysis_n0)
    throw below_n0("case analysis applies for n >= 40, got n = " +
                   std::to_string(n));
  if (p < 2 || p > n - 1)
    throw bad_parameter("p must satisfy 2 <= p <= n-1");
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double dp = static_cast<double>(p);
  if (dp >= epsilon * sqrt_n) return bound_case::first_term;
  if (dp <= 2.0 * sqrt_n / (epsilon + 2.0 / sqrt_n)) return bound_case::second_term;
  return bound_case::both_terms;
}

/// Margins of the four implications behind the case analysis, each evaluated
/// at its binding point x:
///   (1) x >= eps*sqrt(n)   ==> (x^2-x)/2 >= n          m1 at x = eps*sqrt(n)
///   (2) x >= eps*sqrt(n/2) ==> (x^2-x)/2 >= n/2        m2 at x = eps*sqrt(n/2)
///   (3) x <= eps*sqrt(n)   ==> 2n/x - 2 >= eps*sqrt(n/2)   m3 at x = eps*sqrt(n)
///   (4) 2*sqrt(n)/(eps + 2/sqrt(n)) >= eps*sqrt(n/2)       m4 = lhs - rhs
///
/// a2, a3, a4 are the auxiliary quantities a reader would check by hand:
/// a2 = (eps^2-2)*sqrt(n)/2 - eps/sqrt(2) (additive term of (2)),
/// a3 = (2*sqrt(2)/eps - 1)*sqrt(n)/2 - 2, and a4 = eps*sqrt(2)/(2 -
/// eps^2/sqrt(2)) (the closed form whose comparison against sqrt(n) settles
/// (4)). Note a3 is NOT the margin of (3): the correctly expanded additive
/// term is (2/eps - eps/sqrt(2))*sqrt(n) - 2 = m3, and the two disagree in
/// sign for 40 <= n < 80 at eps = 1.531. m3_discrepancy records that
/// disagreement; no positivity of (3) is ever assumed.
struct inequality_report {
  double epsilon = 0.0;
  long long n = 0;
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
  double a2 = 0, a3 = 0, a4 = 0;
  double sqrt_n = 0;
  bool ok1 = false, ok2 = false, ok3 = false, ok4 = false;
  bool m3_discrepancy = false;
};

namespace detail {
// absolute tolerance for sign decisions on margins
inline constexpr double margin_eps = 1e-9;
}  // namespace detail

inline inequality_report inequality_margins(double epsilon, long long n) {
  if (n < 2) throw bad_parameter("margins need n >= 2");
  if (!(epsilon > 0.0)) throw bad_parameter("epsilon must be positive");
  inequality_report r;
  r.epsilon = epsilon;
  r.n = n;
  const double dn = static_cast<double>(n);
  r.sqrt_n = std::sqrt(dn);
  const double sqrt_half = std::sqrt(dn / 2.0);
  const double x1 = epsilon * r.sqrt_n;
  const double x2 = epsilon * sqrt_half;
  r.m1 = (x1 * x1 - x1) / 2.0 - dn;
  r.m2 = (x2 * x2 - x2) / 2.0 - dn / 2.0;
  r.m3 = (2.0 * dn / x1 - 2.0) - x2;
  r.m4 = 2.0 * r.sqrt_n / (epsilon + 2.0 / r.sqrt_n) - x2;
  r.a2 = (epsilon * epsilon - 2.0) * r.sqrt_n / 2.0 - epsilon / std::sqrt(2.0);
  r.a3 = (2.0 * std::sqrt(2.0) / epsilon - 1.0) * r.sqrt_n / 2.0 - 2.0;
  r.a4 = epsilon * std::sqrt(2.0) / (2.0 - epsilon * epsilon / std::sqrt(2.0));
  r.ok1 = r.m1 >= -detail::margin_eps;
  r.ok2 = r.m2 >= -detail::margin_eps;
  r.ok3 = r.m3 >= -detail::margin_eps;
  r.ok4 = r.m4 >= -detail::margin_eps;
  r.m3_discrepancy = !r.ok3 && r.a3 >= -detail::margin_eps;
  return r;
}

/// Smallest n in [n_from, n_to] whose m3 margin is non-negative.
inline std::optional<long long> first_nonnegative_m3(double epsilon,
                                                     long long n_from,
                                                     long long n_to) {
  for (long long n = std::max<long long>(2, n_from); n <= n_to; ++n)
    if (inequality_margins(epsilon, n).ok3) return n;
  return std::nullopt;
}

}  // namespace dbe
