#include "wellpol/conventional_sum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wellpol/dalgarno_lewis.hpp"
#include "wellpol/errors.hpp"

namespace wellpol {

namespace {
constexpr double pi = std::numbers::pi;
}

double box_dipole_element(int n) {
  if (n < 1) throw DomainError("box_dipole_element: n must be >= 1");
  if (n % 2 == 1) return 0.0;
  // For a box of width L: |<1|x|n>| = 8 L n / (pi^2 (n^2 - 1)^2), here L = 2.
  const double m = static_cast<double>(n) * n - 1.0;
  return -16.0 * n / (pi * pi * m * m);
}

double box_energy(int n) { return static_cast<double>(n) * n * pi * pi / 8.0; }

double infinite_well_term(int n) {
  if (n < 2) {
    throw DomainError("infinite_well_term: n must be >= 2, got " + std::to_string(n));
  }
  const double x = box_dipole_element(n);
  return 2.0 * x * x / (box_energy(n) - box_energy(1));
}

InfiniteWellSum infinite_well_alpha(int num_terms) {
  if (num_terms < 1) throw DomainError("infinite_well_alpha: num_terms must be >= 1");
  InfiniteWellSum out;
  out.num_terms = num_terms;
  out.term_values.reserve(static_cast<std::size_t>(num_terms));
  for (int k = 1; k <= num_terms; ++k) out.term_values.push_back(infinite_well_term(2 * k));
  // Smallest terms first.
  double sum = 0.0;
  for (auto it = out.term_values.rbegin(); it != out.term_values.rend(); ++it) sum += *it;
  out.partial_alpha_prime = sum;
  return out;
}

double one_term_alpha_prime() { return 16384.0 / (243.0 * std::pow(pi, 6)); }

AffineInC infinite_well_affine() {
  return {alpha2_t_prime_infinite_well(), chi_bracket_per_c(half_pi)};
}

double calibrate_C(double target_alpha_prime) {
  const AffineInC line = infinite_well_affine();
  if (!(std::abs(line.slope) > 1e-300)) {
    throw NumericalError("calibrate_C: degenerate affine coefficient");
  }
  return (target_alpha_prime - line.intercept) / line.slope;
}

}  // namespace wellpol
