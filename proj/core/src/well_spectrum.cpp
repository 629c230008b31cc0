#include "wellpol/well_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wellpol/errors.hpp"
#include "wellpol/root_finding.hpp"

namespace wellpol {

namespace {

constexpr double bracket_margin = 1e-12;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string("WellSpec: ") + name + " must be positive and finite");
  }
}

GroundState complete(double gamma0, double beta0, double R) {
  GroundState s;
  s.gamma0 = gamma0;
  s.beta0 = beta0;
  s.R = R;
  s.n_prime_sq = normalization_sq(gamma0, beta0);
  s.energy_dimless = -beta0 * beta0;
  return s;
}

}  // namespace

void WellSpec::validate() const {
  require_positive(half_width, "half_width");
  require_positive(depth, "depth");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  if (charge == 0.0 || !std::isfinite(charge)) {
    throw DomainError("WellSpec: charge must be non-zero and finite");
  }
  const double r = strength();
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("WellSpec: derived strength R is not finite and positive");
  }
}

double WellSpec::strength() const {
  return std::sqrt(2.0 * mass * half_width * half_width * depth) / hbar;
}

double WellSpec::polarizability_unit() const {
  const double a2 = half_width * half_width;
  return mass * charge * charge * a2 * a2 / (hbar * hbar);
}

double GroundState::matching_residual() const { return gamma0 * std::tan(gamma0) - beta0; }

double GroundState::circle_residual() const {
  return gamma0 * gamma0 + beta0 * beta0 - R * R;
}

GroundState ground_state_from_R(double R) {
  if (!std::isfinite(R) || !(R > 0.0)) {
    throw DomainError("ground_state_from_R: R must be finite and positive, got " +
                      std::to_string(R));
  }
  // Written as a difference of squares so that sqrt does not lose digits when
  // gamma approaches R (shallow wells).
  auto f = [R](double g) { return g * std::tan(g) - std::sqrt((R - g) * (R + g)); };

  const double upper = std::min(R, half_pi);
  double lo = std::min(bracket_margin, 0.5 * upper);
  double hi = upper - std::min(bracket_margin, 0.25 * upper);
  // For very small R the margin is comparable to R; shrink the lower end until
  // the bracket holds (f(0+) = -R < 0 always).
  while (f(lo) >= 0.0 && lo > 0.0) lo *= 0.5;

  const RootResult root = find_bracketed_root(f, lo, hi, 0.0);
  const double gamma0 = root.root;
  if (gamma0 > max_gamma) {
    throw DomainError("ground_state_from_R: gamma0 is within 1e-9 of pi/2 (R=" +
                      std::to_string(R) + "); use the infinite-well limit instead");
  }
  return complete(gamma0, gamma0 * std::tan(gamma0), R);
}

GroundState ground_state_from_gamma(double gamma0) {
  if (!std::isfinite(gamma0) || !(gamma0 > 0.0) || !(gamma0 <= max_gamma)) {
    throw DomainError("ground_state_from_gamma: gamma0 must lie in (0, pi/2 - 1e-9], got " +
                      std::to_string(gamma0));
  }
  const double beta0 = gamma0 * std::tan(gamma0);
  return complete(gamma0, beta0, std::hypot(gamma0, beta0));
}

GroundState ground_state(const WellSpec& well) {
  well.validate();
  return ground_state_from_R(well.strength());
}

double normalization_sq(double gamma0, double beta0) {
  if (!(beta0 > 0.0)) {
    throw DomainError("normalization_sq: beta0 must be positive");
  }
  if (!(gamma0 > 0.0)) {
    throw DomainError("normalization_sq: gamma0 must be positive");
  }
  const double c = std::cos(gamma0);
  return 1.0 / (1.0 + std::sin(gamma0) * c / gamma0 + c * c / beta0);
}

double psi0_eval(const GroundState& state, double x_over_a) {
  const double n = std::sqrt(state.n_prime_sq);
  const double ax = std::abs(x_over_a);
  if (ax <= 1.0) return n * std::cos(state.gamma0 * ax);
  return n * std::cos(state.gamma0) * std::exp(-state.beta0 * (ax - 1.0));
}

}  // namespace wellpol
