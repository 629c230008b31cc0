#pragma once

#include <numbers>

namespace wellpol {

inline constexpr double half_pi = std::numbers::pi / 2.0;

/// Largest gamma0 accepted by the spectrum solver. Closer to pi/2 tan(gamma0)
/// loses too many digits; use `infinite_well_limit` for that regime.
inline constexpr double max_gamma = half_pi - 1e-9;

/// Dimensionful finite square well: V(x) = -depth for |x| < half_width.
struct WellSpec {
  double half_width = 1.0;
  double depth = 1.0;
  double mass = 1.0;
  double charge = 1.0;
  double hbar = 1.0;

  /// Throws DomainError on any non-positive (or zero-charge) field.
  void validate() const;

  /// Dimensionless strength R = sqrt(2 m a^2 V0) / hbar.
  [[nodiscard]] double strength() const;

  /// Polarizability unit g = m q^2 a^4 / hbar^2.
  [[nodiscard]] double polarizability_unit() const;
};

/// Even-parity ground state in reduced units (x' = x/a).
///
/// gamma0 = K0 a and beta0 = k0 a satisfy gamma0 tan(gamma0) = beta0 and
/// gamma0^2 + beta0^2 = R^2. `n_prime_sq` is N'^2 = a N^2, and
/// `energy_dimless` is E0 * 2 m a^2 / hbar^2 = -beta0^2.
struct GroundState {
  double gamma0 = 0.0;
  double beta0 = 0.0;
  double R = 0.0;
  double n_prime_sq = 0.0;
  double energy_dimless = 0.0;

  /// gamma0 tan(gamma0) - beta0
  [[nodiscard]] double matching_residual() const;
  /// gamma0^2 + beta0^2 - R^2
  [[nodiscard]] double circle_residual() const;
};

/// Solves gamma tan(gamma) = sqrt(R^2 - gamma^2) for the unique ground-state
/// root in (0, min(R, pi/2)).
[[nodiscard]] GroundState ground_state_from_R(double R);

[[nodiscard]] GroundState ground_state_from_gamma(double gamma0);

[[nodiscard]] GroundState ground_state(const WellSpec& well);

/// N'^2 = 1 / [1 + sin(g)cos(g)/g + cos^2(g)/beta0]
[[nodiscard]] double normalization_sq(double gamma0, double beta0);

/// sqrt(a) * psi0(x' a): N' cos(gamma0 x') inside, N' cos(gamma0) exp(-beta0(|x'|-1)) outside.
[[nodiscard]] double psi0_eval(const GroundState& state, double x_over_a);

}  // namespace wellpol
