#include "wellpol/table_format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string_view>

#include "wellpol/errors.hpp"

namespace wellpol {

namespace {

std::string to_chars_string(double value, std::chars_format fmt, int decimals) {
  std::array<char, 512> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt, decimals);
  if (ec != std::errc{}) throw NumericalError("format: value does not fit the output buffer");
  std::string out(buf.data(), end);
  // "-0.000000" -> "0.000000"
  if (out.front() == '-' && out.find_first_not_of("-0.eE+") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  return to_chars_string(value, std::chars_format::fixed, decimals);
}

std::string format_scientific(double value, int decimals) {
  std::string s = to_chars_string(value, std::chars_format::scientific, decimals);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  const std::string mantissa = s.substr(0, e);
  const char sign = s[e + 1];
  std::string digits = s.substr(e + 2);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  return mantissa + "E" + sign + digits;
}

std::string format_polarizability(double value, int decimals) {
  const double mag = std::abs(value);
  if (mag >= 10.0 || (mag > 0.0 && mag < 1e-4)) {
    return format_scientific(value, std::max(1, decimals - 4));
  }
  return format_fixed(value, decimals);
}

}  // namespace wellpol
