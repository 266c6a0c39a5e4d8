#pragma once

#include <cmath>
#include <cstddef>

#include "lssa/errors.hpp"

namespace lssa {

struct BisectionResult {
  double root = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Bisection on a sign-changing bracket [lo, hi]. Stops once the bracket
/// is narrower than `x_tol` and |f(mid)| <= f_tol, or when the bracket can
/// no longer be split in double precision. Throws UsageError when f(lo)
/// and f(hi) share a sign, ConvergenceError after `max_iterations`.
template <typename Function>
BisectionResult bisect(const Function& f, double lo, double hi, double x_tol, double f_tol,
                       std::size_t max_iterations = 200) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw UsageError("bisection bracket does not change sign");
  }
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    if (f_mid == 0.0 || mid == lo || mid == hi ||
        (hi - lo < x_tol && std::abs(f_mid) <= f_tol)) {
      return {mid, f_mid, it};
    }
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisection did not converge");
}

} // namespace lssa
