#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wellpol {

/// Finite-difference model of H0 = -d^2/dx'^2 - R^2 1[|x'| < 1] on [-L, L]
/// with hard walls; energies in units of hbar^2 / (2 m a^2).
struct GridOracleConfig {
  /// Well strength R; std::nullopt selects the hard-wall box of half-width 1.
  std::optional<double> well_R;
  double box_half_width = 12.0;
  int num_points = 4799;  // interior nodes
  int num_states = 200;
  std::vector<double> field_values{-1e-3, -5e-4, 0.0, 5e-4, 1e-3};

  /// Defaults for a finite well: L = max(12, 1 + 40/beta0), ~200 nodes per a,
  /// interval count a multiple of 16.
  [[nodiscard]] static GridOracleConfig finite_well(double R);
  /// Hard-wall box |x'| < 1.
  [[nodiscard]] static GridOracleConfig hard_wall(int num_points = 2399);

  [[nodiscard]] bool is_hard_wall() const { return !well_R.has_value(); }
  [[nodiscard]] double grid_step() const;

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

struct Spectrum {
  std::vector<double> x;         // interior nodes
  std::vector<double> energies;  // ascending
  /// Column-major, num_points x energies.size(); normalized so that
  /// h * sum v^2 = 1, sign fixed by the largest component on x' > 0.
  std::vector<double> vectors;
  double step = 0.0;

  [[nodiscard]] std::size_t size() const { return x.size(); }
  [[nodiscard]] const double* state(std::size_t n) const { return vectors.data() + n * x.size(); }
};

[[nodiscard]] Spectrum solve_spectrum(const GridOracleConfig& config);

struct OracleResult {
  double alpha_sum = 0.0;
  double alpha_curvature = 0.0;
  double ground_energy_dimless = 0.0;
  double richardson_alpha = 0.0;

  struct Diagnostics {
    std::vector<double> contributions;  // per excited state n = 1..K-1
    double tail_bound = 0.0;            // upper bound on the omitted states
    double fit_residual = 0.0;          // max |E - fit| / |curvature|
    double linear_coefficient = 0.0;
    std::vector<double> field_energies;
    std::vector<double> level_alphas;   // refine(): alpha_sum per level
    std::vector<double> level_extrapolations;
    std::vector<int> level_points;
    double observed_order = 0.0;
    std::optional<std::string> warning;
  } diagnostics;
};

/// alpha' = 4 sum_{n>=1} |<n|x'|0>|^2 / (E'_n - E'_0) over the computed states.
[[nodiscard]] OracleResult alpha_sum_over_states(const GridOracleConfig& config);

/// Quadratic fit of E'_0(eps') under -eps' x'; alpha' = -4 * curvature.
[[nodiscard]] OracleResult alpha_from_curvature(const GridOracleConfig& config);

/// Sum-over-states alpha' on `levels + 1` grids, each with the interval
/// count doubled, Richardson-extrapolated assuming O(h^2). An observed order
/// outside [1.5, 2.5] sets diagnostics.warning.
[[nodiscard]] OracleResult refine(const GridOracleConfig& config, int levels);

/// Both routes at the configured grid plus `refine(config_base, levels)`,
/// where config_base has (num_points + 1) / 2^levels intervals.
[[nodiscard]] OracleResult run_oracle(const GridOracleConfig& config, int levels = 2);

}  // namespace wellpol
