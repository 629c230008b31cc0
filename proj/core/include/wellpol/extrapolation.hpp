#pragma once

#include <cmath>

namespace wellpol {

/// Two-point Richardson extrapolation. `coarse` and `fine` are evaluations at
/// step h and h/ratio of a quantity with leading error term C*h^order.
inline double richardson(double coarse, double fine, double ratio, double order) {
  const double factor = std::pow(ratio, order);
  return fine + (fine - coarse) / (factor - 1.0);
}

/// Observed convergence order from three evaluations at h, h/ratio, h/ratio^2.
/// NaN when the differences do not shrink monotonically.
inline double observed_order(double coarse, double medium, double fine, double ratio) {
  const double d1 = coarse - medium;
  const double d2 = medium - fine;
  if (d2 == 0.0 || d1 / d2 <= 0.0) return std::nan("");
  return std::log(d1 / d2) / std::log(ratio);
}

}  // namespace wellpol
