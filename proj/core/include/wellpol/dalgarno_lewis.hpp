#pragma once

#include <cmath>
#include <functional>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wellpol/well_spectrum.hpp"

namespace wellpol {

/// Working precision for finite-difference checks of the inhomogeneous
/// equations. A double-precision three-point stencil at step 1e-5 carries
/// ~1e-6 rounding error, far above the residual bounds being checked.
using extended_real = boost::multiprecision::cpp_bin_float_50;

/// Step of the central second difference used by the residual checks.
inline constexpr double residual_fd_step = 1e-5;

/// Coefficient of the amplitude printed for the infinite well with C' = -1.
/// Used verbatim by the large-R approximation alpha_apr'.
inline constexpr double infinite_well_alpha_coefficient = 0.0702247;

/// C' = C/a^2 = -(pi/2)^2 / gamma0^2
[[nodiscard]] inline double default_c_prime(double gamma0) {
  return -(half_pi * half_pi) / (gamma0 * gamma0);
}

/// Reduced Dalgarno-Lewis function phi'(x'), defined through
/// phi(x) = (m q eps a^3 N / (2 hbar^2)) * phi'(x/a).
///
///   x' >  1 : cos(g) e^{-b(x'-1)} [ x'^2/b + x'/b^2 ]
///   x' < -1 : cos(g) e^{ b(x'+1)} [-x'^2/b + x'/b^2 ]
///   |x'|<=1 : -[ x'^2 sin(g x')/g + x' cos(g x')/g^2 + C' sin(g x')/g ]
///
/// The inner piece is the particular solution plus C' times the homogeneous
/// solution sin(g x'). No continuity at |x'| = 1 is imposed.
struct PhiReduced {
  GroundState state;
  double c_coefficient = 0.0;

  [[nodiscard]] static PhiReduced with_default_c(const GroundState& s) {
    return {s, default_c_prime(s.gamma0)};
  }

  template <class Real>
  [[nodiscard]] Real value(const Real& x) const;

  [[nodiscard]] double operator()(double x) const { return value<double>(x); }
};

template <class Real>
Real PhiReduced::value(const Real& x) const {
  using std::cos;
  using std::exp;
  using std::sin;
  const Real g = state.gamma0;
  const Real b = state.beta0;
  if (x > 1) {
    return cos(g) * exp(-b * (x - 1)) * (x * x / b + x / (b * b));
  }
  if (x < -1) {
    return cos(g) * exp(b * (x + 1)) * (-x * x / b + x / (b * b));
  }
  const Real s = sin(g * x);
  return -(x * x * s / g + x * cos(g * x) / (g * g) + Real(c_coefficient) * s / g);
}

[[nodiscard]] double phi_eval(const PhiReduced& phi, double x_over_a);

/// phi'(1+) - phi'(1-). Reported as a diagnostic only.
[[nodiscard]] double phi_edge_jump(const PhiReduced& phi);

enum class Differentiation { analytic, central_difference };

/// [-b^2 + d^2/dx'^2] phi' + 4 x' cos(g) e^{-b(|x'|-1)}, for |x'| > 1.
[[nodiscard]] double ode_residual_outer(const PhiReduced& phi, double x_over_a,
                                        Differentiation mode = Differentiation::analytic);

/// [g^2 + d^2/dx'^2] phi' + 4 x' cos(g x'), for |x'| < 1. The C' sin(g x')
/// term is annihilated by the operator, so any C' leaves this at zero.
[[nodiscard]] double ode_residual_inner(const PhiReduced& phi, double x_over_a,
                                        Differentiation mode = Differentiation::analytic);

/// [g^2 + d^2/dx'^2] applied to the homogeneous part C' sin(g x') / g alone.
[[nodiscard]] double chi_residual(const PhiReduced& phi, double x_over_a,
                                  Differentiation mode = Differentiation::analytic);

/// Outer residual for an arbitrary trial function, differentiated by the
/// extended-precision central second difference. Used to probe that the
/// residual check is able to fail.
[[nodiscard]] double outer_residual_of(const GroundState& state,
                                       const std::function<extended_real(const extended_real&)>& trial,
                                       double x_over_a);

/// Outer-region polarizability in units of g = m q^2 a^4 / hbar^2.
[[nodiscard]] double alpha1_prime(const GroundState& state);

/// Inner bracket of the particular solution alone (per unit N'^2):
/// -1/(3g^2) + cos2g/(2g^2) - 5 sin2g/(4g^3) - 5 cos2g/(4g^4) + 5 sin2g/(8g^5)
[[nodiscard]] double trial_bracket(double gamma0);

/// Coefficient of C' in the inner bracket: cos2g/(2g^2) - sin2g/(4g^3).
[[nodiscard]] double chi_bracket_per_c(double gamma0);

/// Inner-region polarizability of the particular solution alone.
[[nodiscard]] double alpha2_t_prime(const GroundState& state);

/// Inner-region polarizability with the default C' (f1', f2' form).
[[nodiscard]] double alpha2_prime(const GroundState& state);

/// Inner-region polarizability for an arbitrary C'; affine in C'.
[[nodiscard]] double alpha2_prime(const GroundState& state, double c_prime);

/// gamma0 = pi/2 (N'^2 = 1) forms.
[[nodiscard]] double alpha2_prime_infinite_well(double c_prime = -1.0);
[[nodiscard]] double alpha2_t_prime_infinite_well();

/// Wide-infinite-well approximation: 0.0702247 (1 + 1/R)^4.
[[nodiscard]] double alpha_apr_prime(double R);

/// (alpha2' - alpha2_t') / alpha2', computed as a ratio of brackets so that it
/// does not depend on N'^2.
[[nodiscard]] double t_ratio(const GroundState& state);
[[nodiscard]] double t_ratio(const GroundState& state, double c_prime);

struct PolarizabilityBreakdown {
  double gamma0 = 0.0;
  double beta0 = 0.0;
  double R = 0.0;
  double alpha1_prime = 0.0;
  double alpha2_prime = 0.0;
  double alpha2_t_prime = 0.0;
  double alpha_prime = 0.0;
  double alpha_apr_prime = 0.0;
  double t_ratio = 0.0;
};

[[nodiscard]] PolarizabilityBreakdown breakdown(const GroundState& state);

struct QuadratureAlpha {
  double alpha_prime = 0.0;    // outer + inner
  double outer = 0.0;          // both tails; equals alpha1'
  double inner = 0.0;          // equals alpha2'
  double error_estimate = 0.0;
};

/// alpha' = N' * integral x' psi0(x') phi'(x') dx' over the three regions,
/// tails truncated at |x'| = 1 + 40/beta0.
[[nodiscard]] QuadratureAlpha alpha_via_quadrature(const GroundState& state);
[[nodiscard]] QuadratureAlpha alpha_via_quadrature(const PhiReduced& phi);

/// Integral of psi0 * f over the real line (split at x' = +-1).
[[nodiscard]] double overlap_with_ground_state(const GroundState& state,
                                               const std::function<double(double)>& f);

/// <psi0 | phi'>
[[nodiscard]] double orthogonality(const PhiReduced& phi);

/// Integral of psi0^2 over the real line; 1 for a normalized state.
[[nodiscard]] double norm_by_quadrature(const GroundState& state);

/// Dimensionful outer and inner polarizabilities for a concrete well.
[[nodiscard]] double alpha1(const WellSpec& well);
[[nodiscard]] double alpha2(const WellSpec& well);

}  // namespace wellpol
