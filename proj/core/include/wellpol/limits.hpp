#pragma once

#include <span>
#include <vector>

namespace wellpol {

/// alpha1 * hbar^2 k0^4 / (m q^2) for the attractive delta potential.
inline constexpr double delta_alpha1_scaled_limit = 1.25;

/// Halving schedule a_i = a0 / 2^i, V0_i = V0 * 2^i (a V0 fixed), i = 0..steps.
struct DeltaLimitConfig {
  double initial_half_width = 1.0;
  double initial_depth = 0.5;
  int steps = 12;
  double mass = 1.0;
  double charge = 1.0;
  double hbar = 1.0;

  void validate() const;
};

struct DeltaLimitSequence {
  int steps = 0;
  std::vector<double> a_values;
  std::vector<double> v0_values;
  std::vector<double> alpha1_scaled;
  std::vector<double> alpha2_scaled;
  /// N^2 cos^2(K0 a) / k0 per step; tends to 1.
  std::vector<double> weight_ratio;
  /// |alpha1_scaled[i+1] - 5/4| / |alpha1_scaled[i] - 5/4|
  std::vector<double> alpha1_error_ratios;

  double alpha1_extrapolated = 0.0;
  double alpha2_extrapolated = 0.0;
  double weight_ratio_extrapolated = 0.0;
};

/// Evaluates the dimensionful outer/inner polarizabilities along the halving
/// schedule and Richardson-extrapolates (first order in a) from the last two
/// steps.
[[nodiscard]] DeltaLimitSequence delta_limit(const DeltaLimitConfig& config = {});

struct InfiniteWellLimit {
  std::vector<double> epsilons;  // gamma0 = pi/2 - eps
  std::vector<double> alpha1;
  std::vector<double> alpha2;
  std::vector<double> alpha2_t;

  double alpha1_extrapolated = 0.0;
  double alpha2_extrapolated = 0.0;
  double alpha2_t_extrapolated = 0.0;

  /// Closed forms evaluated directly at gamma0 = pi/2.
  double alpha2_exact = 0.0;
  double alpha2_t_exact = 0.0;
};

[[nodiscard]] std::vector<double> default_infinite_well_epsilons();

/// Evaluates alpha1', alpha2', (alpha2')_t at gamma0 = pi/2 - eps and
/// extrapolates eps -> 0 (first order) from the two smallest eps.
/// Throws ConfigError for fewer than three or non-decreasing eps, and
/// NumericalError when eps < 1e-9.
[[nodiscard]] InfiniteWellLimit infinite_well_limit(std::span<const double> epsilons);

}  // namespace wellpol
