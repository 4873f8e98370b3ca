#include "cramer/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cramer/parallel.hpp"

namespace cramer {
namespace {

constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;

// Adaptive Simpson with absolute tolerance. Plenty for integrands that are
// smooth away from the interval ends.
template <typename F>
long double adapt(const F& f, long double a, long double b, long double fa,
                  long double fm, long double fb, long double whole,
                  long double tol, int depth) {
  const long double m = 0.5L * (a + b);
  const long double lm = 0.5L * (a + m);
  const long double rm = 0.5L * (m + b);
  const long double flm = f(lm);
  const long double frm = f(rm);
  const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
  const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
  const long double delta = left + right - whole;
  if (depth <= 0 || fabsl(delta) <= 15.0L * tol)
    return left + right + delta / 15.0L;
  return adapt(f, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
}

template <typename F>
long double integrate(const F& f, long double a, long double b,
                      long double abs_tol) {
  if (a == b) return 0.0L;
  const long double fa = f(a);
  const long double fb = f(b);
  const long double fm = f(0.5L * (a + b));
  const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
  return adapt(f, a, b, fa, fm, fb, whole, abs_tol, 64);
}

long double reciprocal_log(long double t) {
  if (t <= 0.0L) return 0.0L;  // integrand limit at t -> 0+
  return 1.0L / logl(t);
}

// Deterministic chunked sum: fixed-size blocks are summed independently
// (possibly in parallel) and combined in index order, so the result does
// not depend on the thread budget.
template <typename Term>
double chunked_sum(std::uint64_t lo, std::uint64_t hi, const Term& term) {
  if (hi < lo) return 0.0;
  constexpr std::uint64_t kBlock = 1u << 20;
  const std::uint64_t count = hi - lo + 1;
  const std::size_t blocks = static_cast<std::size_t>((count + kBlock - 1) / kBlock);
  std::vector<double> partial(blocks, 0.0);
  parallel_for_index(blocks, [&](std::size_t b) {
    const std::uint64_t first = lo + static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t last = std::min(hi, first + kBlock - 1);
    double s = 0.0;
    for (std::uint64_t k = first; k <= last; ++k) s += term(k);
    partial[b] = s;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

long double log_integral_quadrature(long double x) {
  if (!(x >= 0.0L) || x == 1.0L)
    throw std::domain_error("log_integral: x must be >= 0 and != 1");
  if (x == 0.0L) return 0.0L;
  if (x < 1.0L) return integrate(reciprocal_log, 0.0L, x, 1e-14L);
  // Principal value: li(x) = li(2) + int_2^x dt/log t, with the pole at
  // t = 1 folded into the constant.
  const long double li2 = static_cast<long double>(kLiOfTwo);
  if (x >= 2.0L) return li2 + integrate(reciprocal_log, 2.0L, x, 1e-10L);
  return li2 - integrate(reciprocal_log, x, 2.0L, 1e-12L);
}

long double log_integral_series(long double x) {
  if (!(x >= 0.0L) || x == 1.0L)
    throw std::domain_error("log_integral: x must be >= 0 and != 1");
  if (x == 0.0L) return 0.0L;
  const long double u = logl(x);
  long double sum = 0.0L;
  long double term = 1.0L;  // u^k / k!
  for (int k = 1; k < 400; ++k) {
    term *= u / k;
    const long double add = term / k;
    sum += add;
    if (fabsl(add) < 1e-22L * (1.0L + fabsl(sum)) && k > fabsl(u)) break;
  }
  return kEulerGamma + logl(fabsl(u)) + sum;
}

double log_integral(double x) {
  return static_cast<double>(log_integral_quadrature(static_cast<long double>(x)));
}

ExpectedCount expected_rp_count(std::uint64_t n, const UrnSchedule& schedule) {
  if (n < 1) throw std::invalid_argument("expected_rp_count: n must be >= 1");
  ExpectedCount out{n, 0.0};
  if (n == 1) return out;
  double tail = 0.0;
  if (n >= 3) {
    // Specialize the classical kernel: the 1e8-term sums in the slow
    // variation diagnostics live or die on this loop.
    if (schedule.kind() == UrnSchedule::Kind::classical) {
      tail = chunked_sum(3, n, [](std::uint64_t k) {
        return 1.0 / std::log(static_cast<double>(k));
      });
    } else {
      tail = chunked_sum(3, n, [&](std::uint64_t k) { return schedule.prob(k); });
    }
  }
  out.value = schedule.prob(2) + tail;
  return out;
}

ExpectedCount expected_constellation_count(std::uint64_t n, double C, int K) {
  if (K < 1) throw std::domain_error("expected_constellation_count: K must be >= 1");
  if (!(C > 0.0)) throw std::domain_error("expected_constellation_count: C must be > 0");
  ExpectedCount out{n, 0.0};
  if (n <= 2) return out;  // empty integration range
  const auto integrand = [K](long double t) {
    return powl(logl(t), static_cast<long double>(-K));
  };
  // Two passes: a rough estimate fixes the scale of the absolute tolerance
  // so the final answer is accurate to ~1e-12 relative.
  const long double hi = static_cast<long double>(n);
  const long double rough = integrate(integrand, 2.0L, hi, 1e-4L);
  const long double tol = 1e-12L * (rough > 1.0L ? rough : 1.0L);
  out.value = C * static_cast<double>(integrate(integrand, 2.0L, hi, tol));
  return out;
}

}  // namespace cramer
