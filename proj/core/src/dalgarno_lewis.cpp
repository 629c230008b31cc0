#include "wellpol/dalgarno_lewis.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wellpol/errors.hpp"

namespace wellpol {

namespace {

constexpr double quarter_pi_sq = half_pi * half_pi;

// Neumaier's variant of Kahan summation.
double compensated_sum(std::initializer_list<double> terms) {
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      carry += (sum - next) + t;
    } else {
      carry += (t - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

double tail_end(const GroundState& s) { return 1.0 + 40.0 / s.beta0; }

struct Integral {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

template <class Fn>
Integral integrate(Fn&& f, double a, double b, const char* what) {
  using boost::math::quadrature::gauss_kronrod;
  Integral out;
  out.value = gauss_kronrod<double, 15>::integrate(f, a, b, 20, 1e-12, &out.error, &out.l1);
  const double allowed = std::max(1e-10 * out.l1, 1e-13);
  if (!std::isfinite(out.value) || out.error > allowed) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "quadrature did not converge (" << what << " on [" << a << ", " << b
        << "]): estimate=" << out.value << " error=" << out.error << " L1=" << out.l1;
    throw NumericalError(msg.str());
  }
  return out;
}

// Central second difference carried out in extended precision.
template <class Fn>
extended_real second_difference(Fn&& f, const extended_real& x) {
  const extended_real h = residual_fd_step;
  return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

void require_outer(double x, const char* op) {
  if (!(std::abs(x) > 1.0)) {
    throw DomainError(std::string(op) + ": requires |x'| > 1");
  }
}

void require_inner(double x, const char* op) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError(std::string(op) + ": requires |x'| < 1");
  }
}

}  // namespace

double phi_eval(const PhiReduced& phi, double x_over_a) { return phi(x_over_a); }

double phi_edge_jump(const PhiReduced& phi) {
  const double outside = phi.value(std::nextafter(1.0, 2.0));
  return outside - phi(1.0);
}

double ode_residual_outer(const PhiReduced& phi, double x, Differentiation mode) {
  require_outer(x, "ode_residual_outer");
  const double g = phi.state.gamma0;
  const double b = phi.state.beta0;
  const double ax = std::abs(x);
  const double envelope = std::cos(g) * std::exp(-b * (ax - 1.0));
  if (mode == Differentiation::central_difference) {
    const extended_real xe = x;
    const extended_real d2 = second_difference([&](const extended_real& t) { return phi.value(t); }, xe);
    using std::cos;
    using std::exp;
    const extended_real ge = g, be = b;
    const extended_real env = cos(ge) * exp(-be * (abs(xe) - 1));
    const extended_real r = d2 - be * be * phi.value(xe) + 4 * xe * env;
    return r.convert_to<double>();
  }
  // phi' = s * envelope * u(x) with s = +-1 folded into u for x < -1.
  double u, du, d2u, slope;
  if (x > 0.0) {
    u = x * x / b + x / (b * b);
    du = 2.0 * x / b + 1.0 / (b * b);
    d2u = 2.0 / b;
    slope = -b;
  } else {
    u = -x * x / b + x / (b * b);
    du = -2.0 * x / b + 1.0 / (b * b);
    d2u = -2.0 / b;
    slope = b;
  }
  const double value = envelope * u;
  const double second = envelope * (d2u + 2.0 * slope * du + slope * slope * u);
  return second - b * b * value + 4.0 * x * envelope;
}

double ode_residual_inner(const PhiReduced& phi, double x, Differentiation mode) {
  require_inner(x, "ode_residual_inner");
  const double g = phi.state.gamma0;
  if (mode == Differentiation::central_difference) {
    const extended_real xe = x;
    const extended_real ge = g;
    const extended_real d2 = second_difference([&](const extended_real& t) { return phi.value(t); }, xe);
    using std::cos;
    const extended_real r = d2 + ge * ge * phi.value(xe) + 4 * xe * cos(ge * xe);
    return r.convert_to<double>();
  }
  const double s = std::sin(g * x);
  const double c = std::cos(g * x);
  const double cp = phi.c_coefficient;
  const double second = -((2.0 * s + 4.0 * g * x * c - g * g * x * x * s) / g +
                          (-2.0 * g * s - g * g * x * c) / (g * g) + cp * (-g * g * s) / g);
  return second + g * g * phi(x) + 4.0 * x * c;
}

double chi_residual(const PhiReduced& phi, double x, Differentiation mode) {
  require_inner(x, "chi_residual");
  const double g = phi.state.gamma0;
  const double cp = phi.c_coefficient;
  if (mode == Differentiation::central_difference) {
    const extended_real ge = g, ce = cp, xe = x;
    auto chi = [&](const extended_real& t) {
      using std::sin;
      return -ce * sin(ge * t) / ge;
    };
    const extended_real r = second_difference(chi, xe) + ge * ge * chi(xe);
    return r.convert_to<double>();
  }
  const double chi = -cp * std::sin(g * x) / g;
  const double second = cp * g * std::sin(g * x);
  return second + g * g * chi;
}

double outer_residual_of(const GroundState& state,
                         const std::function<extended_real(const extended_real&)>& trial,
                         double x) {
  require_outer(x, "outer_residual_of");
  using std::cos;
  using std::exp;
  const extended_real xe = x, ge = state.gamma0, be = state.beta0;
  const extended_real env = cos(ge) * exp(-be * (abs(xe) - 1));
  const extended_real r = second_difference(trial, xe) - be * be * trial(xe) + 4 * xe * env;
  return r.convert_to<double>();
}

double alpha1_prime(const GroundState& s) {
  const double b = s.beta0;
  const double c = std::cos(s.gamma0);
  const double b2 = b * b;
  const double bracket = compensated_sum(
      {1.0 / b2, 5.0 / (2.0 * b2 * b), 5.0 / (2.0 * b2 * b2), 5.0 / (4.0 * b2 * b2 * b)});
  return s.n_prime_sq * c * c * bracket;
}

double trial_bracket(double g) {
  const double g2 = g * g;
  const double c2 = std::cos(2.0 * g);
  const double s2 = std::sin(2.0 * g);
  return compensated_sum({-1.0 / (3.0 * g2), c2 / (2.0 * g2), -5.0 * s2 / (4.0 * g2 * g),
                          -5.0 * c2 / (4.0 * g2 * g2), 5.0 * s2 / (8.0 * g2 * g2 * g)});
}

double chi_bracket_per_c(double g) {
  const double g2 = g * g;
  return compensated_sum({std::cos(2.0 * g) / (2.0 * g2), -std::sin(2.0 * g) / (4.0 * g2 * g)});
}

double alpha2_t_prime(const GroundState& s) { return s.n_prime_sq * trial_bracket(s.gamma0); }

double alpha2_prime(const GroundState& s) {
  const double g = s.gamma0;
  const double g2 = g * g;
  const double g4 = g2 * g2;
  const double c2 = std::cos(2.0 * g);
  const double s2 = std::sin(2.0 * g);
  // -1/(3g^2) + f1' cos2g + f2' sin2g, expanded term by term.
  const double bracket = compensated_sum({
      -1.0 / (3.0 * g2),
      c2 / (2.0 * g2),
      -5.0 * c2 / (4.0 * g4),
      -quarter_pi_sq * c2 / (2.0 * g4),
      -5.0 * s2 / (4.0 * g2 * g),
      5.0 * s2 / (8.0 * g4 * g),
      quarter_pi_sq * s2 / (4.0 * g4 * g),
  });
  return s.n_prime_sq * bracket;
}

double alpha2_prime(const GroundState& s, double c_prime) {
  return s.n_prime_sq * compensated_sum({trial_bracket(s.gamma0), c_prime * chi_bracket_per_c(s.gamma0)});
}

double alpha2_prime_infinite_well(double c_prime) {
  return compensated_sum({trial_bracket(half_pi), c_prime * chi_bracket_per_c(half_pi)});
}

double alpha2_t_prime_infinite_well() { return trial_bracket(half_pi); }

double alpha_apr_prime(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw DomainError("alpha_apr_prime: R must be finite and positive");
  }
  const double f = 1.0 + 1.0 / R;
  return infinite_well_alpha_coefficient * (f * f) * (f * f);
}

double t_ratio(const GroundState& s, double c_prime) {
  const double chi_part = c_prime * chi_bracket_per_c(s.gamma0);
  const double full = compensated_sum({trial_bracket(s.gamma0), chi_part});
  if (full == 0.0) {
    throw DomainError("t_ratio: alpha2' vanishes, ratio undefined");
  }
  return chi_part / full;
}

double t_ratio(const GroundState& s) { return t_ratio(s, default_c_prime(s.gamma0)); }

PolarizabilityBreakdown breakdown(const GroundState& s) {
  PolarizabilityBreakdown b;
  b.gamma0 = s.gamma0;
  b.beta0 = s.beta0;
  b.R = s.R;
  b.alpha1_prime = alpha1_prime(s);
  b.alpha2_prime = alpha2_prime(s);
  b.alpha2_t_prime = alpha2_t_prime(s);
  b.alpha_prime = b.alpha1_prime + b.alpha2_prime;
  b.alpha_apr_prime = alpha_apr_prime(s.R);
  b.t_ratio = t_ratio(s);
  return b;
}

QuadratureAlpha alpha_via_quadrature(const PhiReduced& phi) {
  const GroundState& s = phi.state;
  const double n = std::sqrt(s.n_prime_sq);
  auto integrand = [&](double x) { return n * x * psi0_eval(s, x) * phi(x); };
  const double end = tail_end(s);
  const Integral left = integrate(integrand, -end, -1.0, "alpha, x' < -1");
  const Integral middle = integrate(integrand, -1.0, 1.0, "alpha, |x'| < 1");
  const Integral right = integrate(integrand, 1.0, end, "alpha, x' > 1");
  QuadratureAlpha q;
  q.outer = left.value + right.value;
  q.inner = middle.value;
  q.alpha_prime = q.outer + q.inner;
  q.error_estimate = left.error + middle.error + right.error;
  return q;
}

QuadratureAlpha alpha_via_quadrature(const GroundState& state) {
  return alpha_via_quadrature(PhiReduced::with_default_c(state));
}

double overlap_with_ground_state(const GroundState& s, const std::function<double(double)>& f) {
  auto integrand = [&](double x) { return psi0_eval(s, x) * f(x); };
  const double end = tail_end(s);
  return integrate(integrand, -end, -1.0, "overlap, x' < -1").value +
         integrate(integrand, -1.0, 1.0, "overlap, |x'| < 1").value +
         integrate(integrand, 1.0, end, "overlap, x' > 1").value;
}

double orthogonality(const PhiReduced& phi) {
  return overlap_with_ground_state(phi.state, [&](double x) { return phi(x); });
}

double norm_by_quadrature(const GroundState& s) {
  return overlap_with_ground_state(s, [&](double x) { return psi0_eval(s, x); });
}

double alpha1(const WellSpec& well) {
  const GroundState s = ground_state(well);
  const double a = well.half_width;
  const double k = s.beta0 / a;
  const double n_sq = s.n_prime_sq / a;
  const double c = std::cos(s.gamma0);
  const double k2 = k * k;
  const double bracket = compensated_sum({a * a * a / k2, 5.0 * a * a / (2.0 * k2 * k),
                                          5.0 * a / (2.0 * k2 * k2), 5.0 / (4.0 * k2 * k2 * k)});
  return well.mass * well.charge * well.charge * n_sq / (well.hbar * well.hbar) * c * c * bracket;
}

double alpha2(const WellSpec& well) {
  const GroundState s = ground_state(well);
  const double a = well.half_width;
  const double K = s.gamma0 / a;
  const double n_sq = s.n_prime_sq / a;
  const double K2 = K * K;
  const double K4 = K2 * K2;
  const double c2 = std::cos(2.0 * s.gamma0);
  const double s2 = std::sin(2.0 * s.gamma0);
  const double bracket = compensated_sum({
      -a * a * a / (3.0 * K2),
      a * a * a / (2.0 * K2) * c2,
      -5.0 * a / (4.0 * K4) * c2,
      -quarter_pi_sq * a / (2.0 * K4) * c2,
      -5.0 * a * a / (4.0 * K2 * K) * s2,
      5.0 / (8.0 * K4 * K) * s2,
      quarter_pi_sq / (4.0 * K4 * K) * s2,
  });
  return well.mass * well.charge * well.charge * n_sq / (well.hbar * well.hbar) * bracket;
}

}  // namespace wellpol
