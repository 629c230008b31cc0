#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "wellpol/dalgarno_lewis.hpp"
#include "wellpol/errors.hpp"
#include "wellpol/well_spectrum.hpp"

using namespace wellpol;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

GroundState at(double k) { return ground_state_from_gamma(k * pi); }

// 50 points strictly inside (0.1 pi, 0.49 pi).
double grid_gamma(int i) { return pi * (0.1 + 0.39 * (i + 1) / 51.0); }

bool within(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

}  // namespace

TEST_CASE("phi_eval: zero at origin, odd parity, outer value") {
  const PhiReduced phi = PhiReduced::with_default_c(at(0.39));
  CHECK(phi_eval(phi, 0.0) == 0.0);
  for (double x : {0.5, 1.5, 3.0}) {
    CHECK(std::abs(phi_eval(phi, x) + phi_eval(phi, -x)) <= 1e-15);
  }
  // 40-digit evaluation of cos(g) e^{-b} (4/b + 2/b^2).
  CHECK(phi_eval(phi, 2.0) == Approx(0.015191082987919515056).epsilon(1e-13));
  CHECK(phi.c_coefficient == Approx(-1.0 / (0.39 * 0.39 * 4.0)));
}

TEST_CASE("phi edge jump is a finite diagnostic") {
  const PhiReduced phi = PhiReduced::with_default_c(at(0.39));
  const double jump = phi_edge_jump(phi);
  CHECK(std::isfinite(jump));
  MESSAGE("phi'(1+) - phi'(1-) at 0.39 pi: " << jump);
}

TEST_CASE("outer ODE residual") {
  for (auto [k, x] : {std::pair{0.39, 1.5}, std::pair{0.47, 3.0}}) {
    const PhiReduced phi = PhiReduced::with_default_c(at(k));
    CHECK(std::abs(ode_residual_outer(phi, x)) <= 1e-12);
    CHECK(std::abs(ode_residual_outer(phi, -x)) <= 1e-12);
    CHECK(std::abs(ode_residual_outer(phi, x, Differentiation::central_difference)) <= 1e-9);
    CHECK(std::abs(ode_residual_outer(phi, -x, Differentiation::central_difference)) <= 1e-9);
  }
  CHECK_THROWS_AS((void)ode_residual_outer(PhiReduced::with_default_c(at(0.39)), 0.5), DomainError);
  CHECK_THROWS_AS((void)ode_residual_outer(PhiReduced::with_default_c(at(0.39)), 1.0), DomainError);
}

TEST_CASE("outer residual detects a 1% error in the x'^2 coefficient") {
  const GroundState s = at(0.39);
  const extended_real g = s.gamma0, b = s.beta0;
  auto perturbed = [&](const extended_real& x) {
    using std::cos;
    using std::exp;
    return extended_real(cos(g) * exp(-b * (x - 1)) * (1.01 * x * x / b + x / (b * b)));
  };
  CHECK(std::abs(outer_residual_of(s, perturbed, 1.5)) > 1e-3);
  const PhiReduced phi = PhiReduced::with_default_c(s);
  auto exact = [&](const extended_real& x) { return phi.value(x); };
  CHECK(std::abs(outer_residual_of(s, exact, 1.5)) <= 1e-9);
}

TEST_CASE("inner ODE residual and the homogeneous chi term") {
  const PhiReduced phi = PhiReduced::with_default_c(at(0.39));
  CHECK(std::abs(ode_residual_inner(phi, 0.3)) <= 1e-12);
  CHECK(std::abs(ode_residual_inner(phi, 0.3, Differentiation::central_difference)) <= 1e-9);
  CHECK(std::abs(chi_residual(phi, 0.7)) <= 1e-12);
  CHECK(std::abs(chi_residual(phi, 0.7, Differentiation::central_difference)) <= 1e-9);

  PhiReduced other = phi;
  other.c_coefficient = -1.0;
  CHECK(std::abs(ode_residual_inner(other, 0.3, Differentiation::central_difference)) <= 1e-9);
  CHECK_THROWS_AS((void)ode_residual_inner(phi, 1.0), DomainError);
  CHECK_THROWS_AS((void)chi_residual(phi, -1.5), DomainError);
}

TEST_CASE("alpha1_prime") {
  CHECK(within(alpha1_prime(at(0.39)), 0.015178, 1e-6));
  CHECK(within(alpha1_prime(at(0.45)), 0.000363, 1e-6));
  const GroundState infinite{half_pi, std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::infinity(), 1.0,
                             -std::numeric_limits<double>::infinity()};
  CHECK(alpha1_prime(infinite) == 0.0);
}

TEST_CASE("alpha2_t_prime") {
  CHECK(within(alpha2_t_prime_infinite_well(), -0.1324176, 5e-8));
  // Quadrature of x' psi0 phi_t over the well (frozen 40-digit value, and an
  // independent Simpson evaluation here).
  const GroundState s = at(0.39);
  CHECK(alpha2_t_prime(s) == Approx(-0.26294270331254839497).epsilon(1e-13));
  const double g = s.gamma0;
  auto integrand = [&](double x) {
    const double trial = -(x * x * std::sin(g * x) / g + x * std::cos(g * x) / (g * g));
    return s.n_prime_sq * x * std::cos(g * x) * trial;
  };
  CHECK(test::simpson(integrand, -1.0, 1.0, 4000) == Approx(alpha2_t_prime(s)).epsilon(1e-11));
}

TEST_CASE("alpha2_prime") {
  CHECK(within(alpha2_prime(at(0.39)), 0.173148, 1e-6));
  CHECK(within(alpha2_prime(at(0.49)), 0.076129, 1e-6));
  CHECK(within(alpha2_prime_infinite_well(), 0.0702247, 5e-8));
  // Closed form: -4/(3 pi^2) + 20/pi^4.
  CHECK(alpha2_prime_infinite_well() == Approx(-4.0 / (3 * pi * pi) + 20.0 / std::pow(pi, 4)).epsilon(1e-14));
}

TEST_CASE("alpha2_prime: f1'/f2' form equals the affine decomposition") {
  for (int i = 0; i < 50; ++i) {
    const GroundState s = ground_state_from_gamma(grid_gamma(i));
    CHECK(alpha2_prime(s) == Approx(alpha2_prime(s, default_c_prime(s.gamma0))).epsilon(1e-12));
  }
}

TEST_CASE("alpha_apr_prime") {
  CHECK(within(alpha_apr_prime(3.617018), 0.186438, 1e-6));
  // The table's 0.089913 corresponds to R = 15.689884 (gamma0^2 + beta0^2 = R^2).
  CHECK(within(alpha_apr_prime(15.689884), 0.089913, 1e-6));
  CHECK(within(alpha_apr_prime(1e15), 0.0702247, 1e-12));
  CHECK_THROWS_AS((void)alpha_apr_prime(0.0), DomainError);
  CHECK_THROWS_AS((void)alpha_apr_prime(-2.0), DomainError);
}

TEST_CASE("t_ratio") {
  CHECK(within(t_ratio(at(0.39)), 2.52, 0.01));
  CHECK(within(t_ratio(at(0.47)), 2.84, 0.01));
  CHECK(t_ratio(at(0.39), 0.0) == 0.0);
  const GroundState s = at(0.43);
  CHECK(t_ratio(s) == Approx((alpha2_prime(s) - alpha2_t_prime(s)) / alpha2_prime(s)).epsilon(1e-12));
}

TEST_CASE("t_ratio undefined when alpha2' vanishes") {
  // alpha2' is affine in C'; choose the C' that zeroes it.
  const GroundState s = at(0.39);
  const double c_zero = -trial_bracket(s.gamma0) / chi_bracket_per_c(s.gamma0);
  const double value = alpha2_prime(s, c_zero);
  if (value == 0.0) {
    CHECK_THROWS_AS((void)t_ratio(s, c_zero), DomainError);
  } else {
    CHECK(std::abs(value) < 1e-15);
  }
}

TEST_CASE("property: t_ratio invariant under N'^2 rescaling") {
  for (int i = 0; i < 50; i += 7) {
    GroundState s = ground_state_from_gamma(grid_gamma(i));
    const double t = t_ratio(s);
    s.n_prime_sq *= 3.7;
    CHECK(t_ratio(s) == t);
  }
}

TEST_CASE("breakdown rows") {
  const PolarizabilityBreakdown b43 = breakdown(at(0.43));
  CHECK(within(b43.alpha1_prime, 0.001663, 1e-6));
  CHECK(within(b43.alpha2_prime, 0.125180, 1e-6));
  CHECK(within(b43.alpha_prime, 0.126843, 1e-6));
  CHECK(within(b43.alpha_apr_prime, 0.127803, 1e-6));
  CHECK(b43.alpha_prime == b43.alpha1_prime + b43.alpha2_prime);

  const PolarizabilityBreakdown b19 = breakdown(at(0.19));
  CHECK(within(b19.alpha1_prime, 49.3, 0.05));
  CHECK(within(b19.alpha2_prime, 0.620993, 1e-6));
  CHECK(within(b19.alpha_prime, 49.9, 0.05));

  CHECK(within(breakdown(at(0.41)).alpha_prime, 0.152993, 1e-6));
}

TEST_CASE("alpha via quadrature") {
  const QuadratureAlpha q39 = alpha_via_quadrature(at(0.39));
  CHECK(within(q39.alpha_prime, 0.188326, 1e-6));
  CHECK(within(q39.outer, 0.015178, 1e-6));
  const GroundState s45 = at(0.45);
  CHECK(alpha_via_quadrature(s45).alpha_prime == Approx(breakdown(s45).alpha_prime).epsilon(1e-8));
}

TEST_CASE("orthogonality") {
  for (double k : {0.39, 0.47}) {
    CHECK(std::abs(orthogonality(PhiReduced::with_default_c(at(k)))) <= 1e-10);
  }
  const PhiReduced phi = PhiReduced::with_default_c(at(0.39));
  const double contaminated = overlap_with_ground_state(phi.state, [&](double x) {
    return phi(x) + (std::abs(x) < 1.0 ? x * x : 0.0);
  });
  CHECK(std::abs(contaminated) > 1e-2);
}

TEST_CASE("property sweep over gamma0 in (0.1 pi, 0.49 pi)") {
  for (int i = 0; i < 50; ++i) {
    const GroundState s = ground_state_from_gamma(grid_gamma(i));
    const PhiReduced phi = PhiReduced::with_default_c(s);
    CAPTURE(s.gamma0 / pi);
    CHECK(std::abs(orthogonality(phi)) <= 1e-10);
    const double closed = alpha1_prime(s) + alpha2_prime(s);
    CHECK(std::abs(alpha_via_quadrature(s).alpha_prime - closed) / closed <= 1e-8);
    for (int j = 0; j < 20; ++j) {
      const double inner = -0.95 + 1.9 * j / 19.0;
      const double outer = 1.5 + 2.5 * j / 19.0;
      CHECK(std::abs(ode_residual_inner(phi, inner, Differentiation::central_difference)) <= 1e-9);
      CHECK(std::abs(chi_residual(phi, inner, Differentiation::central_difference)) <= 1e-9);
      CHECK(std::abs(ode_residual_outer(phi, outer, Differentiation::central_difference)) <= 1e-9);
      CHECK(std::abs(ode_residual_outer(phi, -outer, Differentiation::central_difference)) <= 1e-9);
      CHECK(phi(outer) == -phi(-outer));
      CHECK(phi(inner) == -phi(-inner));
    }
  }
}

TEST_CASE("property: alpha' positive and increasing as R decreases") {
  double previous = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 399; ++i) {
    const double g = pi * (0.1 + 0.399 * (i + 0.5) / 400.0);
    const PolarizabilityBreakdown b = breakdown(ground_state_from_gamma(g));
    CHECK(b.alpha_prime > 0.0);
    CHECK(b.alpha1_prime >= 0.0);
    CHECK(b.alpha_prime < previous);  // gamma0 up <=> R up
    previous = b.alpha_prime;
  }
}

TEST_CASE("property: infinite-well values at gamma0 = pi/2 - 1e-7") {
  const GroundState s = ground_state_from_gamma(half_pi - 1e-7);
  CHECK(std::abs(alpha1_prime(s)) <= 1e-7);
  CHECK(within(alpha2_prime(s), 0.0702247, 1e-6));
  CHECK(within(alpha2_t_prime(s), -0.1324176, 1e-6));
}

TEST_CASE("dimensionful polarizabilities scale by g") {
  const WellSpec w{0.7, 3.0, 1.3, 2.0, 0.9};
  const GroundState s = ground_state(w);
  const double g = w.polarizability_unit();
  CHECK(alpha1(w) == Approx(g * alpha1_prime(s)).epsilon(1e-12));
  CHECK(alpha2(w) == Approx(g * alpha2_prime(s)).epsilon(1e-12));
}
