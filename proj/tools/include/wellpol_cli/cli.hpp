#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wellpol::cli {

using json = nlohmann::ordered_json;

enum class ExitCode : int {
  ok = 0,
  band_failure = 1,
  usage = 2,
  domain = 3,
  numerical = 4,
  io = 5,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// numerator / denominator * pi with denominator a power of ten, so decimal
/// input like "0.39pi" is held exactly.
struct PiFraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  [[nodiscard]] double radians() const;
  /// Shortest decimal form of numerator / denominator ("0.39", "0.4").
  [[nodiscard]] std::string label() const;
  [[nodiscard]] PiFraction rescaled(std::int64_t new_denominator) const;
};

/// A plain decimal followed by "pi" or "π", e.g. "0.39pi"; nullopt otherwise.
[[nodiscard]] std::optional<PiFraction> parse_pi_multiple(std::string_view text);

/// gamma0 input: a multiple of pi or a plain number in radians.
struct GammaInput {
  double radians = 0.0;
  std::optional<PiFraction> pi_multiple;

  [[nodiscard]] std::string label(int precision) const;
};

/// Throws UsageError when the text is neither form.
[[nodiscard]] GammaInput parse_gamma(std::string_view text);

struct Cell {
  double value = 0.0;
  std::string text;
  bool numeric = true;
};

struct Check {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  json meta = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  json diagnostics = json::object();
  std::vector<Check> checks;
  /// Whether failing checks change the exit status.
  bool enforce_checks = false;

  [[nodiscard]] bool all_passed() const;
};

enum class LimitMode { delta, infinite, both };

struct SweepRange {
  std::string min;
  std::string max;
  std::string step;
};

struct OracleRequest {
  std::optional<double> R;
  bool hard_wall = false;
  std::optional<int> points;
  std::optional<int> states;
  int levels = 2;
};

[[nodiscard]] Report make_table1(int precision, bool enforce_checks = false);
[[nodiscard]] Report make_table2(int precision, bool enforce_checks = false);
[[nodiscard]] Report make_solve(const std::optional<std::string>& gamma,
                                const std::optional<double>& R, int precision);
[[nodiscard]] Report make_sweep(const SweepRange& range, int precision);
[[nodiscard]] Report make_limits(LimitMode mode, int precision);
[[nodiscard]] Report make_oracle(const OracleRequest& request, int precision);
[[nodiscard]] Report make_calibrate(const std::optional<double>& target, int precision);

/// Comma-separated, RFC-4180 quoting, one header row.
void write_csv(const Report& report, std::ostream& out);
/// {"meta", "rows", "diagnostics"}; numeric cells at full precision.
void write_json(const Report& report, std::ostream& out);

[[nodiscard]] std::string csv_escape(std::string_view field);

/// Full command-line entry point; args excludes the program name.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wellpol::cli
