#pragma once

#include <vector>

namespace wellpol {

// Conventional second-order sum for the infinite well occupying |x| < a,
// with eigenstates psi_n = sin(n pi (x + a) / 2a) / sqrt(a), n = 1, 2, ...
// Lengths are in units of a and energies in units of hbar^2 / (m a^2), so
// a contribution 2 |x'_1n|^2 / (E'_n - E'_1) is already in units of g.

/// <1|x'|n>; zero for odd n.
[[nodiscard]] double box_dipole_element(int n);

/// E'_n = n^2 pi^2 / 8
[[nodiscard]] double box_energy(int n);

/// Contribution of the 1 -> n transition. Throws DomainError for n < 2.
[[nodiscard]] double infinite_well_term(int n);

struct InfiniteWellSum {
  int num_terms = 0;
  double partial_alpha_prime = 0.0;
  std::vector<double> term_values;  // n = 2, 4, 6, ...
};

/// Partial sum over the first `num_terms` contributing (even-n) transitions.
[[nodiscard]] InfiniteWellSum infinite_well_alpha(int num_terms);

/// 16384 / (243 pi^6): the n = 2 term alone.
[[nodiscard]] double one_term_alpha_prime();

/// Affine dependence of the infinite-well Dalgarno-Lewis alpha2' on C':
/// alpha2'(C') = intercept + slope * C'.
struct AffineInC {
  double intercept = 0.0;
  double slope = 0.0;
};

[[nodiscard]] AffineInC infinite_well_affine();

/// C' making the infinite-well Dalgarno-Lewis polarizability equal the target.
[[nodiscard]] double calibrate_C(double target_alpha_prime);

}  // namespace wellpol
