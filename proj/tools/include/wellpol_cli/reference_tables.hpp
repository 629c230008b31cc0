#pragma once

// Printed reference values for the two polarizability tables, with the
// tolerance of one unit in the last printed digit of each cell.

#include <array>
#include <cstdint>

namespace wellpol::cli {

struct ReferenceCell {
  double value;
  double tolerance;
};

struct ReferenceRow {
  std::int64_t gamma_numerator;  // gamma0 = numerator / 100 * pi
  ReferenceCell beta0;
  ReferenceCell R;
  ReferenceCell alpha1;
  ReferenceCell alpha2;
  ReferenceCell alpha;
  ReferenceCell alpha_apr;  // table 1 only; tolerance 0 marks absent
};

inline constexpr std::int64_t reference_gamma_denominator = 100;

inline constexpr std::array<ReferenceRow, 6> table1_reference{{
    {39, {3.403183, 1e-6}, {3.617018, 1e-6}, {0.015178, 1e-6}, {0.173148, 1e-6}, {0.188326, 1e-6}, {0.186438, 1e-6}},
    {41, {4.433507, 1e-6}, {4.616825, 1e-6}, {0.005510, 1e-6}, {0.147482, 1e-6}, {0.152993, 1e-6}, {0.153844, 1e-6}},
    {43, {6.043511, 1e-6}, {6.192650, 1e-6}, {0.001663, 1e-6}, {0.125180, 1e-6}, {0.126843, 1e-6}, {0.127803, 1e-6}},
    {45, {8.925856, 1e-6}, {9.037118, 1e-6}, {0.000363, 1e-6}, {0.106019, 1e-6}, {0.106382, 1e-6}, {0.106858, 1e-6}},
    {47, {15.620252, 1e-6}, {15.589884, 1e-6}, {3.99e-5, 0.01e-5}, {0.089754, 1e-6}, {0.089794, 1e-6}, {0.089913, 1e-6}},
    {49, {48.983879, 1e-6}, {49.008061, 1e-6}, {4.24e-7, 0.01e-7}, {0.076129, 1e-6}, {0.076129, 1e-6}, {0.076134, 1e-6}},
}};

// Three significant figures in the scientific cells: +-0.05E+1 etc.
inline constexpr std::array<ReferenceRow, 3> table2_reference{{
    {19, {0.405655, 1e-6}, {0.721698, 1e-6}, {4.93e1, 0.05e1}, {0.620993, 1e-6}, {4.99e1, 0.05e1}, {0.0, 0.0}},
    {17, {0.315849, 1e-6}, {0.620477, 1e-6}, {1.31e2, 0.05e2}, {0.677762, 1e-6}, {1.32e2, 0.05e2}, {0.0, 0.0}},
    {15, {0.240108, 1e-6}, {0.528884, 1e-6}, {3.87e2, 0.05e2}, {0.733438, 1e-6}, {3.88e2, 0.05e2}, {0.0, 0.0}},
}};

/// Printed T-ratio values: 2.52 at 0.39 pi and 2.84 at 0.47 pi.
inline constexpr std::array<ReferenceCell, 2> t_ratio_reference{{{2.52, 0.01}, {2.84, 0.01}}};

/// Printed one-term conventional value.
inline constexpr double one_term_reference = 0.0701371;

}  // namespace wellpol::cli
