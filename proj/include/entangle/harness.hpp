#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

// Scaling fits, result tables and the oracle-equivalence suite.
namespace entangle::harness {

struct Point {
  double L;
  double S;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  int n_points = 0;
};

/// Ordinary least squares of S = slope·ln L + intercept. Needs ≥ 3 points
/// with distinct L.
ScalingFit fit_log(std::span<const Point> points);

/// fit_log on S / L^{d-1}.
ScalingFit fit_area_log(std::span<const Point> points, int d);

struct LinearLogFit {
  double linear = 0.0;    // coefficient of L
  double log = 0.0;       // coefficient of ln L
  double constant = 0.0;
  double rms_residual = 0.0;
};

/// S = linear·L + log·ln L + constant; needs ≥ 4 points.
LinearLogFit fit_linear_log(std::span<const Point> points);

/// Column-oriented numeric table with optional per-row labels.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;  // empty, or one per row (emitted as a leading "name" column)

  /// Header row, then one line per row; 12 significant digits, '\n' endings.
  std::string to_csv() const;
};

/// Parses the CSV format written by Table::to_csv (numeric columns only).
Table parse_csv(std::string_view text);

std::string format_number(double v);

struct OracleCheck {
  std::string name;
  double fast;
  double oracle;
  double tolerance;
  bool passed;
};

/// Runs fast-path vs brute-force comparisons. Suites: "fermion", "spin",
/// "boson", "all".
std::vector<OracleCheck> run_oracle_checks(std::string_view suite);

}  // namespace entangle::harness
