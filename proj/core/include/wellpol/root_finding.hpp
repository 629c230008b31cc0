#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "wellpol/errors.hpp"

namespace wellpol {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // f(root)
  int iterations = 0;
};

/// Bracketed bisection with safeguarded secant steps.
///
/// Requires f(lo) and f(hi) of opposite sign. The bracket is kept as a best
/// point `b` and a contrapoint `c` of opposite sign. Each iteration proposes a
/// secant step through `b` and the previous best point; it is accepted only if
/// it falls strictly between `b` and the bracket midpoint and the bracket
/// width has halved over the last two iterations. Otherwise the step bisects,
/// so convergence is never slower than plain bisection.
///
/// Stops when the bracket is no wider than max(x_tolerance, 2 ulp(b)) or f
/// vanishes exactly. `x_tolerance = 0` runs to machine precision.
template <class Fn>
RootResult find_bracketed_root(Fn&& f, double lo, double hi,
                               double x_tolerance = 0.0,
                               int max_iterations = 200) {
  double b = hi, fb = f(hi);
  double c = lo, fc = f(lo);
  if (!std::isfinite(fb) || !std::isfinite(fc)) {
    throw NumericalError("find_bracketed_root: non-finite function value at bracket end");
  }
  if (fb == 0.0) return {b, 0.0, 0};
  if (fc == 0.0) return {c, 0.0, 0};
  if ((fb < 0.0) == (fc < 0.0)) {
    throw NumericalError("find_bracketed_root: root not bracketed (f(lo)=" +
                         std::to_string(fc) + ", f(hi)=" + std::to_string(fb) + ")");
  }
  double a = c, fa = fc;
  double width_1 = std::numeric_limits<double>::infinity();
  double width_2 = width_1;

  for (int it = 0; it < max_iterations; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; fa = fb;
      b = c; fb = fc;
      c = a; fc = fa;
    }
    const double width = std::abs(c - b);
    const double floor = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
    if (width <= std::max(x_tolerance, floor)) return {b, fb, it};

    const double mid = b + 0.5 * (c - b);
    double x = mid;
    if (width <= 0.5 * width_2 && fa != fb && a != b) {
      const double secant = b - fb * (b - a) / (fb - fa);
      if (std::isfinite(secant) && secant > std::min(b, mid) && secant < std::max(b, mid)) {
        x = secant;
      }
    }
    width_2 = width_1;
    width_1 = width;

    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw NumericalError("find_bracketed_root: non-finite function value at x=" +
                           std::to_string(x));
    }
    a = b; fa = fb;
    b = x; fb = fx;
    if (fb == 0.0) return {b, 0.0, it + 1};
    if ((fb < 0.0) == (fc < 0.0)) {
      c = a; fc = fa;
    }
  }
  throw NumericalError("find_bracketed_root: no convergence after " +
                       std::to_string(max_iterations) + " iterations, bracket [" +
                       std::to_string(std::min(b, c)) + ", " + std::to_string(std::max(b, c)) + "]");
}

}  // namespace wellpol
