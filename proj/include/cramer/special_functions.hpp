#pragma once

#include <cstdint>

#include "cramer/schedule.hpp"

namespace cramer {

// Expected number of events among the first n urns.
struct ExpectedCount {
  std::uint64_t n = 0;
  double value = 0.0;
};

// li(2), anchored independently through the series
// li(x) = gamma + log|log x| + sum_k (log x)^k / (k * k!),
// stored to full double precision.
inline constexpr double kLiOfTwo = 1.0451637801174927848;

// Cauchy principal value of li(x) = pv int_0^x dt/log t.
// Domain: x >= 0, x != 1 (pole of the integrand). For x >= 2 this is
// kLiOfTwo + adaptive quadrature of int_2^x dt/log t; the quadrature runs
// in extended precision so its error stays far below every downstream
// tolerance.
double log_integral(double x);

// The two routes behind the dual-oracle check, exposed in extended
// precision so their agreement can be asserted tighter than double ulp
// at large x. log_integral() itself wraps the quadrature route.
long double log_integral_quadrature(long double x);
long double log_integral_series(long double x);

// sum_{k=1..n} schedule(k). Under the classical schedule this is
// 1 + sum_{k=3..n} 1/log k = li n + O(1).
ExpectedCount expected_rp_count(std::uint64_t n, const UrnSchedule& schedule);

// C * int_2^n (log x)^-K dx, adaptive quadrature to 1e-9 relative.
// The lower limit is 2, not 0: (log x)^-K is non-integrable at x = 1 for
// K >= 1, so the usual 0-based convention is read li-style. Downstream
// uses only ratios and logarithms of this count, where the O(1) offset
// drops out.
ExpectedCount expected_constellation_count(std::uint64_t n, double C, int K);

}  // namespace cramer
