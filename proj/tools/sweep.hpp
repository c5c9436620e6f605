#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coupon/engine.hpp"
#include "coupon/oracle.hpp"
#include "coupon/population.hpp"

namespace coupon::cli {

/// Empty, integer or real CSV cell.
using Cell = std::variant<std::monostate, std::uint64_t, double>;

struct SweepTable {
  /// Emitted as "# key: value" lines above the header row.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// Parses "a..b" with a <= b.
IntRange parse_range(const std::string& text);

/// Reals with 17 significant digits, integers verbatim, empty cells blank.
std::string format_cell(const Cell& cell);
std::string format_real(double x);

void write_csv(const SweepTable& table, std::ostream& os);

/// Expected draws of g = lo..hi individuals without replacement, as groups and
/// as individuals, against the single-arrival baseline.
SweepTable g_sweep(const Population& population, IntRange g, const EngineOptions& options);

struct MSweepConfig {
  IntRange m{5, 20};
  double c = 0.30;
  double theta = 1.75;
  std::uint64_t population_size = 1000;
  int group_size = 2;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  bool simulate = true;
  EngineOptions engine;
  SimOptions sim;
};

/// Exact and simulated expectations for Mandelbrot populations of m types.
/// The exact column is left empty where m exceeds the exact cap.
SweepTable m_sweep(const MSweepConfig& config);

}  // namespace coupon::cli
