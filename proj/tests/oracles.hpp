#pragma once

// Test-only reference computations, kept independent of the library's code
// paths.

#include <cmath>
#include <numbers>

namespace wellpol::test {

/// Plain bisection in long double on g tan(g) - sqrt(R^2 - g^2).
inline long double bisect_gamma(long double R) {
  const long double half_pi = std::numbers::pi_v<long double> / 2;
  long double lo = 0.0L;
  long double hi = std::min(R, half_pi);
  auto f = [R](long double g) { return g * std::tan(g) - std::sqrt(R * R - g * g); };
  for (int i = 0; i < 200 && hi - lo > 1e-18L; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (f(mid) < 0) lo = mid; else hi = mid;
  }
  return 0.5L * (lo + hi);
}

/// Composite Simpson rule with n (even) panels.
template <class Fn>
double simpson(Fn&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace wellpol::test
