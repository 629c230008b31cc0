#include "wellpol/limits.hpp"

#include <cmath>
#include <string>

#include "wellpol/dalgarno_lewis.hpp"
#include "wellpol/errors.hpp"
#include "wellpol/extrapolation.hpp"
#include "wellpol/well_spectrum.hpp"

namespace wellpol {

namespace {
constexpr double min_epsilon = 1e-9;
constexpr double min_initial_R = 0.01;
constexpr double underflow_fraction = 1e-12;
}  // namespace

void DeltaLimitConfig::validate() const {
  const WellSpec well{initial_half_width, initial_depth, mass, charge, hbar};
  try {
    well.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("delta_limit: ") + e.what());
  }
  if (well.strength() < min_initial_R) {
    throw ConfigError("delta_limit: initial well must have R >= 0.01");
  }
  if (steps < 8) throw ConfigError("delta_limit: at least 8 halving steps are required");
  if (std::ldexp(1.0, -steps) < underflow_fraction) {
    throw ConfigError("delta_limit: step underflow, a would fall below 1e-12 of its start");
  }
}

DeltaLimitSequence delta_limit(const DeltaLimitConfig& config) {
  config.validate();
  DeltaLimitSequence out;
  out.steps = config.steps;
  for (int i = 0; i <= config.steps; ++i) {
    WellSpec well{std::ldexp(config.initial_half_width, -i), std::ldexp(config.initial_depth, i),
                  config.mass, config.charge, config.hbar};
    const GroundState s = ground_state(well);
    const double a = well.half_width;
    const double k0 = s.beta0 / a;
    const double k4 = (k0 * k0) * (k0 * k0);
    const double scale = config.hbar * config.hbar * k4 / (config.mass * config.charge * config.charge);
    const double c = std::cos(s.gamma0);

    out.a_values.push_back(a);
    out.v0_values.push_back(well.depth);
    out.alpha1_scaled.push_back(alpha1(well) * scale);
    out.alpha2_scaled.push_back(alpha2(well) * scale);
    out.weight_ratio.push_back((s.n_prime_sq / a) * c * c / k0);
  }
  for (std::size_t i = 0; i + 1 < out.alpha1_scaled.size(); ++i) {
    const double e0 = std::abs(out.alpha1_scaled[i] - delta_alpha1_scaled_limit);
    const double e1 = std::abs(out.alpha1_scaled[i + 1] - delta_alpha1_scaled_limit);
    out.alpha1_error_ratios.push_back(e1 / e0);
  }
  const std::size_t n = out.alpha1_scaled.size();
  out.alpha1_extrapolated = richardson(out.alpha1_scaled[n - 2], out.alpha1_scaled[n - 1], 2.0, 1.0);
  out.alpha2_extrapolated = richardson(out.alpha2_scaled[n - 2], out.alpha2_scaled[n - 1], 2.0, 1.0);
  out.weight_ratio_extrapolated = richardson(out.weight_ratio[n - 2], out.weight_ratio[n - 1], 2.0, 1.0);
  return out;
}

std::vector<double> default_infinite_well_epsilons() { return {1e-3, 5e-4, 2.5e-4, 1.25e-4}; }

InfiniteWellLimit infinite_well_limit(std::span<const double> epsilons) {
  if (epsilons.size() < 3) {
    throw ConfigError("infinite_well_limit: at least three eps values are required");
  }
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw ConfigError("infinite_well_limit: eps must be positive");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw ConfigError("infinite_well_limit: eps must be strictly decreasing");
    }
  }
  if (epsilons.back() < min_epsilon) {
    throw NumericalError("infinite_well_limit: eps below 1e-9 is too close to pi/2 for a stable tan");
  }

  InfiniteWellLimit out;
  for (double eps : epsilons) {
    const GroundState s = ground_state_from_gamma(half_pi - eps);
    out.epsilons.push_back(eps);
    out.alpha1.push_back(alpha1_prime(s));
    out.alpha2.push_back(alpha2_prime(s));
    out.alpha2_t.push_back(alpha2_t_prime(s));
  }
  const std::size_t n = out.epsilons.size();
  const double ratio = out.epsilons[n - 2] / out.epsilons[n - 1];
  out.alpha1_extrapolated = richardson(out.alpha1[n - 2], out.alpha1[n - 1], ratio, 1.0);
  out.alpha2_extrapolated = richardson(out.alpha2[n - 2], out.alpha2[n - 1], ratio, 1.0);
  out.alpha2_t_extrapolated = richardson(out.alpha2_t[n - 2], out.alpha2_t[n - 1], ratio, 1.0);
  out.alpha2_exact = alpha2_prime_infinite_well(-1.0);
  out.alpha2_t_exact = alpha2_t_prime_infinite_well();
  return out;
}

}  // namespace wellpol
