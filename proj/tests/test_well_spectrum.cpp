#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wellpol/dalgarno_lewis.hpp"
#include "wellpol/errors.hpp"
#include "wellpol/well_spectrum.hpp"

using namespace wellpol;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("ground_state_from_R reproduces tabulated rows") {
  const GroundState s1 = ground_state_from_R(3.617018);
  CHECK(s1.gamma0 == Approx(0.39 * pi).epsilon(1e-6));
  CHECK(std::abs(s1.beta0 - 3.403183) <= 1e-6);

  const GroundState s6 = ground_state_from_R(49.008061);
  CHECK(std::abs(s6.gamma0 - 0.49 * pi) <= 1e-8);
  CHECK(std::abs(s6.beta0 - 48.983879) <= 2e-6);
}

TEST_CASE("ground_state_from_R at R = 4 matches an independent bisection") {
  const long double oracle_gamma = test::bisect_gamma(4.0L);
  // Frozen 40-digit value of the same root.
  CHECK(std::abs(static_cast<double>(oracle_gamma) - 1.2523532340025887632) <= 1e-15);

  const GroundState s = ground_state_from_R(4.0);
  CHECK(std::abs(s.gamma0 - static_cast<double>(oracle_gamma)) <= 1e-14);
  CHECK(std::abs(s.beta0 - 3.7988960735038879387) <= 1e-13);
  CHECK(std::abs(s.matching_residual()) <= 1e-12);
  CHECK(std::abs(s.circle_residual()) <= 1e-12);
  CHECK(s.energy_dimless == -s.beta0 * s.beta0);
}

TEST_CASE("ground_state_from_gamma") {
  const GroundState a = ground_state_from_gamma(0.39 * pi);
  CHECK(std::abs(a.beta0 - 3.403183) <= 1e-6);
  CHECK(std::abs(a.R - 3.617018) <= 1e-6);

  const GroundState b = ground_state_from_gamma(0.15 * pi);
  CHECK(std::abs(b.beta0 - 0.240108) <= 1e-6);
  CHECK(std::abs(b.R - 0.528884) <= 1e-6);

  SUBCASE("shallow-well limit: beta0 ~ gamma0^2") {
    for (double g : {1e-2, 1e-3, 1e-4}) {
      const GroundState s = ground_state_from_gamma(g);
      CHECK(s.beta0 == Approx(g * g).epsilon(g * g));
      CHECK(s.R == Approx(g).epsilon(g * g));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS((void)ground_state_from_R(0.0), DomainError);
  CHECK_THROWS_AS((void)ground_state_from_R(-1.0), DomainError);
  CHECK_THROWS_AS((void)ground_state_from_R(std::nan("")), DomainError);
  CHECK_THROWS_AS((void)ground_state_from_R(INFINITY), DomainError);
  CHECK_THROWS_AS((void)ground_state_from_R(1e12), DomainError);  // gamma0 within 1e-9 of pi/2
  CHECK_THROWS_AS((void)ground_state_from_gamma(0.0), DomainError);
  CHECK_THROWS_AS((void)ground_state_from_gamma(half_pi), DomainError);
  CHECK_THROWS_AS((void)ground_state_from_gamma(2.0), DomainError);
  CHECK_NOTHROW((void)ground_state_from_gamma(max_gamma));
  CHECK_THROWS_AS((void)normalization_sq(0.5, 0.0), DomainError);
  CHECK_THROWS_AS((WellSpec{1.0, -1.0, 1.0, 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((WellSpec{1.0, 1.0, 1.0, 0.0, 1.0}.validate()), DomainError);
}

TEST_CASE("normalization_sq") {
  CHECK(normalization_sq(half_pi, 3.0) == Approx(1.0).epsilon(1e-15));
  // High-precision re-evaluation at gamma0 = 0.39 pi, beta0 = gamma0 tan gamma0.
  const GroundState s = ground_state_from_gamma(0.39 * pi);
  CHECK(s.n_prime_sq == Approx(0.77289154552994017479).epsilon(1e-14));
  // Row 0.47 pi: printed beta0 fed back through the outer polarizability.
  const double g = 0.47 * pi;
  const double b = 15.620252;
  const double n2 = normalization_sq(g, b);
  const double c = std::cos(g);
  const double a1 = n2 * c * c * (1 / (b * b) + 2.5 / (b * b * b) + 2.5 / std::pow(b, 4) + 1.25 / std::pow(b, 5));
  CHECK(std::abs(a1 - 3.99e-5) <= 1e-7);
}

TEST_CASE("psi0_eval") {
  const GroundState s = ground_state_from_gamma(0.39 * pi);
  CHECK(psi0_eval(s, 0.0) == Approx(std::sqrt(s.n_prime_sq)));
  const double inside = psi0_eval(s, 1.0);
  const double outside = psi0_eval(s, std::nextafter(1.0, 2.0));
  CHECK(inside == Approx(outside).epsilon(1e-14));
  CHECK(inside == Approx(std::sqrt(s.n_prime_sq) * std::cos(s.gamma0)));
}

TEST_CASE("psi0 is normalized (adaptive quadrature and Simpson)") {
  for (double k : {0.15, 0.39, 0.49}) {
    const GroundState s = ground_state_from_gamma(k * pi);
    CHECK(std::abs(norm_by_quadrature(s) - 1.0) <= 1e-9);
    // Independent composite Simpson on the three regions.
    auto sq = [&](double x) { const double p = psi0_eval(s, x); return p * p; };
    const double end = 1.0 + 40.0 / s.beta0;
    const double simpson = test::simpson(sq, -1.0, 1.0, 2000) + 2.0 * test::simpson(sq, 1.0, end, 200000);
    CHECK(std::abs(simpson - 1.0) <= 1e-9);
  }
}

TEST_CASE("property: residuals, parity and log-derivative continuity") {
  for (int i = 0; i < 100; ++i) {
    const double g = (0.005 + 0.49 * i / 99.0) * pi;
    const GroundState s = ground_state_from_gamma(g);
    CHECK(std::abs(s.matching_residual()) <= 1e-10);
    CHECK(std::abs(s.circle_residual()) <= 1e-10);
    // Inner log-derivative at x'=1 is -g tan g; outer is -beta0.
    CHECK(std::abs(-g * std::tan(g) - (-s.beta0)) <= 1e-10);
    for (double x : {0.1, 0.9, 1.0, 1.7, 4.0}) {
      CHECK(psi0_eval(s, x) == psi0_eval(s, -x));
    }
  }
}

TEST_CASE("property: gamma -> R -> gamma round trip over 100 points") {
  for (int i = 0; i < 100; ++i) {
    const double g = (0.005 + 0.49 * i / 99.0) * pi;
    const GroundState forward = ground_state_from_gamma(g);
    const GroundState back = ground_state_from_R(forward.R);
    CHECK(std::abs(back.gamma0 - g) <= 1e-10);
    CHECK(std::abs(back.matching_residual()) <= 1e-10);
    CHECK(std::abs(back.circle_residual()) <= 1e-10);
    CHECK(back.n_prime_sq == Approx(normalization_sq(back.gamma0, back.beta0)).epsilon(1e-12));
  }
}

TEST_CASE("WellSpec adapter") {
  const WellSpec w{2.0, 0.5, 3.0, -1.5, 1.1};
  CHECK(w.strength() == Approx(std::sqrt(2.0 * 3.0 * 4.0 * 0.5) / 1.1));
  CHECK(w.polarizability_unit() == Approx(3.0 * 2.25 * 16.0 / 1.21));
  const GroundState s = ground_state(w);
  CHECK(s.R == Approx(w.strength()));
}
