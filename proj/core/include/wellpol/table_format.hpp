#pragma once

#include <string>

namespace wellpol {

/// Fixed-point with `decimals` places; locale-independent.
[[nodiscard]] std::string format_fixed(double value, int decimals);

/// Mantissa with `decimals` places and a compact exponent: 3.99E-5, 4.93E+1.
[[nodiscard]] std::string format_scientific(double value, int decimals);

/// Polarizability column style: fixed-point unless |value| >= 10 or
/// 0 < |value| < 1e-4, in which case scientific with (decimals - 4) mantissa
/// places (2 at the default 6).
[[nodiscard]] std::string format_polarizability(double value, int decimals = 6);

}  // namespace wellpol
