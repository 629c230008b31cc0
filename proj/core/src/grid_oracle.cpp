#include "wellpol/grid_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <lapacke.h>

#include "wellpol/errors.hpp"
#include "wellpol/extrapolation.hpp"
#include "wellpol/well_spectrum.hpp"

namespace wellpol {

namespace {

constexpr int min_points = 500;
constexpr int min_states = 50;
constexpr double max_field = 1e-2;
constexpr double max_fit_residual = 1e-8;

double effective_half_width(const GridOracleConfig& c) {
  return c.is_hard_wall() ? 1.0 : c.box_half_width;
}

struct Grid {
  std::vector<double> x;
  std::vector<double> potential;
  double h = 0.0;
};

Grid make_grid(const GridOracleConfig& c) {
  Grid g;
  const double L = effective_half_width(c);
  const int n = c.num_points;
  g.h = 2.0 * L / (n + 1);
  g.x.resize(static_cast<std::size_t>(n));
  g.potential.assign(static_cast<std::size_t>(n), 0.0);
  const double depth = c.is_hard_wall() ? 0.0 : (*c.well_R) * (*c.well_R);
  for (int i = 0; i < n; ++i) {
    // Symmetric by construction: x_i = -x_{n-1-i}.
    const double x = g.h * (i + 1 - 0.5 * (n + 1));
    g.x[static_cast<std::size_t>(i)] = x;
    if (depth > 0.0) {
      // Cell average of the well indicator over [x - h/2, x + h/2].
      const double lo = std::max(x - 0.5 * g.h, -1.0);
      const double hi = std::min(x + 0.5 * g.h, 1.0);
      const double inside = std::max(hi - lo, 0.0) / g.h;
      g.potential[static_cast<std::size_t>(i)] = -depth * inside;
    }
  }
  return g;
}

struct Eigenpairs {
  std::vector<double> values;
  std::vector<double> vectors;  // column-major n x m
};

Eigenpairs lowest_eigenpairs(const Grid& g, double field, int count) {
  const auto n = static_cast<lapack_int>(g.x.size());
  const double inv_h2 = 1.0 / (g.h * g.h);
  std::vector<double> d(g.x.size());
  std::vector<double> e(g.x.size(), -inv_h2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = 2.0 * inv_h2 + g.potential[i] - field * g.x[i];
  }
  lapack_int found = 0;
  Eigenpairs out;
  out.values.resize(g.x.size());
  out.vectors.resize(g.x.size() * static_cast<std::size_t>(count));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(count));
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0,
                                         1, count, 0.0, &found, out.values.data(),
                                         out.vectors.data(), n, support.data());
  if (info != 0 || found != count) {
    std::ostringstream msg;
    msg << "grid eigensolver failed: dstevr info=" << info << " found=" << found
        << " requested=" << count << " n=" << n << " h=" << g.h;
    throw NumericalError(msg.str());
  }
  out.values.resize(static_cast<std::size_t>(count));
  // Unit trapezoid norm (boundary values are zero), sign by largest x > 0 entry.
  const double scale = 1.0 / std::sqrt(g.h);
  for (lapack_int k = 0; k < count; ++k) {
    double* v = out.vectors.data() + static_cast<std::size_t>(k) * g.x.size();
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      if (g.x[i] > 0.0 && std::abs(v[i]) > best) {
        best = std::abs(v[i]);
        arg = i;
      }
    }
    const double s = v[arg] < 0.0 ? -scale : scale;
    for (std::size_t i = 0; i < g.x.size(); ++i) v[i] *= s;
  }
  return out;
}

// Rayleigh quotient with the kinetic term in difference form; avoids the
// eps * 4/h^2 rounding floor of the eigenvalue itself.
double rayleigh_energy(const Grid& g, double field, const double* v) {
  const std::size_t n = g.x.size();
  double kinetic = v[0] * v[0] + v[n - 1] * v[n - 1];
  double potential = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double dv = v[i + 1] - v[i];
    kinetic += dv * dv;
  }
  for (std::size_t i = 0; i < n; ++i) {
    potential += (g.potential[i] - field * g.x[i]) * v[i] * v[i];
    norm += v[i] * v[i];
  }
  return (kinetic / (g.h * g.h) + potential) / norm;
}

double ground_energy(const Grid& g, double field) {
  const Eigenpairs p = lowest_eigenpairs(g, field, 1);
  return rayleigh_energy(g, field, p.vectors.data());
}

// Least-squares quadratic y = c0 + c1 t + c2 t^2.
std::array<double, 3> fit_quadratic(const std::vector<double>& t, const std::vector<double>& y) {
  std::array<double, 5> m{};
  std::array<double, 3> r{};
  for (std::size_t i = 0; i < t.size(); ++i) {
    double p = 1.0;
    for (int k = 0; k < 5; ++k) {
      m[static_cast<std::size_t>(k)] += p;
      if (k < 3) r[static_cast<std::size_t>(k)] += p * y[i];
      p *= t[i];
    }
  }
  std::array<std::array<double, 4>, 3> a{{{m[0], m[1], m[2], r[0]},
                                          {m[1], m[2], m[3], r[1]},
                                          {m[2], m[3], m[4], r[2]}}};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) throw NumericalError("curvature fit: singular normal equations");
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

}  // namespace

GridOracleConfig GridOracleConfig::finite_well(double R) {
  const GroundState s = ground_state_from_R(R);
  GridOracleConfig c;
  c.well_R = R;
  c.box_half_width = std::max(12.0, 1.0 + 40.0 / s.beta0);
  // ~200 nodes per a; interval count a multiple of 16 so refine() can halve.
  const double intervals = std::ceil(2.0 * c.box_half_width * 200.0 / 16.0) * 16.0;
  c.num_points = static_cast<int>(intervals) - 1;
  return c;
}

GridOracleConfig GridOracleConfig::hard_wall(int num_points) {
  GridOracleConfig c;
  c.well_R = std::nullopt;
  c.box_half_width = 1.0;
  c.num_points = num_points;
  return c;
}

double GridOracleConfig::grid_step() const {
  return 2.0 * effective_half_width(*this) / (num_points + 1);
}

void GridOracleConfig::validate() const {
  if (num_points < min_points) throw ConfigError("grid oracle: num_points must be >= 500");
  if (num_states < min_states) throw ConfigError("grid oracle: num_states must be >= 50");
  if (num_states > num_points) throw ConfigError("grid oracle: num_states exceeds num_points");
  if (well_R) {
    const double R = *well_R;
    if (!(R > 0.0) || !std::isfinite(R)) throw ConfigError("grid oracle: well_R must be positive");
    if (!(box_half_width > 1.0)) throw ConfigError("grid oracle: box_half_width must exceed 1");
    const GroundState s = ground_state_from_R(R);
    if (box_half_width < 1.0 + 30.0 / s.beta0) {
      std::ostringstream msg;
      msg << "grid oracle: box_half_width " << box_half_width << " < 1 + 30/beta0 = "
          << 1.0 + 30.0 / s.beta0 << " (ground-state tail not contained)";
      throw ConfigError(msg.str());
    }
  }
  if (field_values.size() < 3) throw ConfigError("grid oracle: need at least three field values");
  std::vector<double> sorted = field_values;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (std::abs(sorted[i]) > max_field) {
      throw ConfigError("grid oracle: |field| must not exceed 1e-2");
    }
    if (sorted[i] != -sorted[sorted.size() - 1 - i]) {
      throw ConfigError("grid oracle: field values must be symmetric about 0");
    }
  }
  if (sorted.front() == sorted.back()) throw ConfigError("grid oracle: field values are all zero");
}

Spectrum solve_spectrum(const GridOracleConfig& config) {
  config.validate();
  const Grid g = make_grid(config);
  Eigenpairs p = lowest_eigenpairs(g, 0.0, config.num_states);
  Spectrum s;
  s.x = g.x;
  s.energies = std::move(p.values);
  s.vectors = std::move(p.vectors);
  s.step = g.h;
  return s;
}

OracleResult alpha_sum_over_states(const GridOracleConfig& config) {
  config.validate();
  const Grid g = make_grid(config);
  const Eigenpairs p = lowest_eigenpairs(g, 0.0, config.num_states);
  const std::size_t n = g.x.size();
  const double* ground = p.vectors.data();
  const double e0 = p.values[0];

  OracleResult out;
  out.ground_energy_dimless = rayleigh_energy(g, 0.0, ground);

  double strength = 0.0;  // <0|x^2|0>
  for (std::size_t i = 0; i < n; ++i) strength += g.x[i] * g.x[i] * ground[i] * ground[i];
  strength *= g.h;

  double captured = 0.0;
  double alpha = 0.0;
  for (int k = 0; k < config.num_states; ++k) {
    const double* v = p.vectors.data() + static_cast<std::size_t>(k) * n;
    double dipole = 0.0;
    for (std::size_t i = 0; i < n; ++i) dipole += ground[i] * g.x[i] * v[i];
    dipole *= g.h;
    captured += dipole * dipole;
    if (k == 0) continue;
    const double gap = p.values[static_cast<std::size_t>(k)] - e0;
    if (!(gap > 1e-12 * std::max(1.0, std::abs(e0)))) {
      std::ostringstream msg;
      msg << "grid oracle: degenerate level " << k << " (E_n - E_0 = " << gap << ")";
      throw NumericalError(msg.str());
    }
    const double term = 4.0 * dipole * dipole / gap;
    out.diagnostics.contributions.push_back(term);
    alpha += term;
  }
  const double last_gap = p.values.back() - e0;
  out.diagnostics.tail_bound = 4.0 * std::max(strength - captured, 0.0) / last_gap;
  out.alpha_sum = alpha;
  return out;
}

OracleResult alpha_from_curvature(const GridOracleConfig& config) {
  config.validate();
  const Grid g = make_grid(config);
  const double f_max = *std::max_element(config.field_values.begin(), config.field_values.end());

  OracleResult out;
  std::vector<double> t;
  std::vector<double> y;
  double reference = 0.0;
  for (double f : config.field_values) {
    const double e = ground_energy(g, f);
    out.diagnostics.field_energies.push_back(e);
    if (f == 0.0) out.ground_energy_dimless = e;
  }
  reference = out.diagnostics.field_energies[config.field_values.size() / 2];
  for (std::size_t i = 0; i < config.field_values.size(); ++i) {
    t.push_back(config.field_values[i] / f_max);
    y.push_back(out.diagnostics.field_energies[i] - reference);
  }
  const auto c = fit_quadratic(t, y);
  const double curvature = c[2] / (f_max * f_max);
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst = std::max(worst, std::abs(y[i] - (c[0] + c[1] * t[i] + c[2] * t[i] * t[i])));
  }
  out.diagnostics.fit_residual = worst / std::abs(curvature);
  out.diagnostics.linear_coefficient = c[1] / f_max;
  if (out.diagnostics.fit_residual > max_fit_residual) {
    std::ostringstream msg;
    msg << "grid oracle: field too large, quadratic fit residual " << out.diagnostics.fit_residual
        << " exceeds 1e-8 of the curvature";
    throw NumericalError(msg.str());
  }
  out.alpha_curvature = -4.0 * curvature;
  return out;
}

OracleResult refine(const GridOracleConfig& config, int levels) {
  if (levels < 2) throw ConfigError("refine: at least two grid doublings are required");
  OracleResult out;
  auto& d = out.diagnostics;
  for (int k = 0; k <= levels; ++k) {
    GridOracleConfig level = config;
    level.num_points = (config.num_points + 1) * (1 << k) - 1;
    level.num_states = std::min(config.num_states, level.num_points);
    const OracleResult r = alpha_sum_over_states(level);
    d.level_points.push_back(level.num_points);
    d.level_alphas.push_back(r.alpha_sum);
    if (k > 0) d.level_extrapolations.push_back(richardson(d.level_alphas[k - 1], r.alpha_sum, 2.0, 2.0));
    out.alpha_sum = r.alpha_sum;
    out.ground_energy_dimless = r.ground_energy_dimless;
  }
  const std::size_t n = d.level_alphas.size();
  d.observed_order = observed_order(d.level_alphas[n - 3], d.level_alphas[n - 2], d.level_alphas[n - 1], 2.0);
  if (!(d.observed_order >= 1.5 && d.observed_order <= 2.5)) {
    std::ostringstream msg;
    msg << "observed convergence order " << d.observed_order << " outside [1.5, 2.5]";
    d.warning = msg.str();
  }
  out.richardson_alpha = d.level_extrapolations.back();
  return out;
}

OracleResult run_oracle(const GridOracleConfig& config, int levels) {
  OracleResult out = alpha_sum_over_states(config);
  const OracleResult curv = alpha_from_curvature(config);
  out.alpha_curvature = curv.alpha_curvature;
  out.diagnostics.fit_residual = curv.diagnostics.fit_residual;
  out.diagnostics.linear_coefficient = curv.diagnostics.linear_coefficient;
  out.diagnostics.field_energies = curv.diagnostics.field_energies;

  const int intervals = config.num_points + 1;
  if (intervals % (1 << levels) != 0) {
    throw ConfigError("run_oracle: num_points + 1 must be divisible by 2^levels");
  }
  GridOracleConfig base = config;
  base.num_points = intervals / (1 << levels) - 1;
  base.num_states = std::min(config.num_states, base.num_points);
  const OracleResult ref = refine(base, levels);
  out.richardson_alpha = ref.richardson_alpha;
  out.diagnostics.level_alphas = ref.diagnostics.level_alphas;
  out.diagnostics.level_extrapolations = ref.diagnostics.level_extrapolations;
  out.diagnostics.level_points = ref.diagnostics.level_points;
  out.diagnostics.observed_order = ref.diagnostics.observed_order;
  out.diagnostics.warning = ref.diagnostics.warning;
  return out;
}

}  // namespace wellpol
