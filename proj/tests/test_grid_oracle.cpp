#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wellpol/conventional_sum.hpp"
#include "wellpol/dalgarno_lewis.hpp"
#include "wellpol/errors.hpp"
#include "wellpol/grid_oracle.hpp"
#include "wellpol/well_spectrum.hpp"

using namespace wellpol;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("finite-well ground energy matches -beta0^2") {
  GridOracleConfig c;
  c.well_R = 3.617018;
  c.box_half_width = 12.0;
  c.num_points = 3999;
  const Spectrum s = solve_spectrum(c);
  const GroundState g = ground_state_from_R(3.617018);
  CHECK(std::abs(s.energies[0] + g.beta0 * g.beta0) <= 1e-3 * g.beta0 * g.beta0);
}

TEST_CASE("hard-wall spectrum and parity") {
  const GridOracleConfig c = GridOracleConfig::hard_wall();
  const Spectrum s = solve_spectrum(c);
  for (int n = 1; n <= 6; ++n) {
    const double exact = n * n * pi * pi / 4.0;
    CHECK(s.energies[static_cast<std::size_t>(n - 1)] == Approx(exact).epsilon(1e-4));
  }
  const std::size_t N = s.size();
  for (std::size_t k = 0; k < 4; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      worst = std::max(worst, std::abs(s.state(k)[i] - sign * s.state(k)[N - 1 - i]));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("finite-well oracle at the deepest table row") {
  const double R = ground_state_from_gamma(0.49 * pi).R;
  const GridOracleConfig c = GridOracleConfig::finite_well(R);
  const OracleResult sum = alpha_sum_over_states(c);
  // Even excited states carry no dipole weight.
  for (std::size_t n = 1; n < sum.diagnostics.contributions.size(); n += 2) {
    CHECK(std::abs(sum.diagnostics.contributions[n]) < 1e-10);
  }
  CHECK(sum.diagnostics.tail_bound < 1e-3 * sum.alpha_sum);

  const OracleResult curv = alpha_from_curvature(c);
  CHECK(std::abs(curv.alpha_curvature - sum.alpha_sum) <= 5e-3 * sum.alpha_sum);
  // Odd term vanishes by symmetry; bound set by eigenvalue roundoff / eps.
  CHECK(std::abs(curv.diagnostics.linear_coefficient) <= 1e-7);
  CHECK(curv.diagnostics.fit_residual <= 1e-8);
  // eps = 0 reproduces the unperturbed ground energy.
  CHECK(curv.diagnostics.field_energies[2] == Approx(sum.ground_energy_dimless).epsilon(1e-10));
}

TEST_CASE("refinement: second order and agreement with the exact box sum") {
  const OracleResult r = refine(GridOracleConfig::hard_wall(), 2);
  CHECK(std::abs(r.diagnostics.observed_order - 2.0) <= 0.3);
  CHECK_FALSE(r.diagnostics.warning.has_value());
  const double exact = alpha2_prime_infinite_well(-1.0);
  CHECK(std::abs(r.diagnostics.level_alphas.back() - exact) <= 2e-3 * exact);
  CHECK(std::abs(r.richardson_alpha - exact) <= 1e-6 * exact);
  CHECK(std::abs(r.richardson_alpha - infinite_well_alpha(200).partial_alpha_prime) <= 1e-6 * exact);
}

TEST_CASE("alpha' positive and decreasing with well strength") {
  double previous = INFINITY;
  for (double R : {2.0, 3.0, 5.0}) {
    GridOracleConfig c = GridOracleConfig::finite_well(R);
    const double a = alpha_sum_over_states(c).alpha_sum;
    CHECK(a > 0.0);
    CHECK(a < previous);
    previous = a;
  }
}

TEST_CASE("configuration errors") {
  GridOracleConfig c = GridOracleConfig::finite_well(4.0);
  c.num_points = 100;
  CHECK_THROWS_AS(c.validate(), ConfigError);

  c = GridOracleConfig::finite_well(4.0);
  c.num_states = 10;
  CHECK_THROWS_AS(c.validate(), ConfigError);

  c = GridOracleConfig::finite_well(4.0);
  c.box_half_width = 2.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);

  c = GridOracleConfig::finite_well(4.0);
  c.field_values = {0.0, 1e-3, 2e-3};
  CHECK_THROWS_AS(c.validate(), ConfigError);

  c = GridOracleConfig::finite_well(4.0);
  c.field_values = {-0.1, 0.0, 0.1};
  CHECK_THROWS_AS(c.validate(), ConfigError);

  c = GridOracleConfig::hard_wall(2398);
  CHECK_THROWS_AS((void)run_oracle(c, 2), ConfigError);
}
