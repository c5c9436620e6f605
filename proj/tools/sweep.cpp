#include "sweep.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "coupon/errors.hpp"
#include "coupon/group_model.hpp"

namespace coupon::cli {

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    r.lo = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    r.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw InputError("range \"" + text + "\" must look like a..b");
  }
  if (r.lo > r.hi) throw InputError("range \"" + text + "\" is empty");
  return r;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::uint64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  return {};
}

void write_csv(const SweepTable& table, std::ostream& os) {
  for (const auto& [key, value] : table.metadata) os << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

SweepTable g_sweep(const Population& population, IntRange g, const EngineOptions& options) {
  if (g.lo < 1) throw InputError("g-sweep: group sizes start at 1");
  if (static_cast<std::uint64_t>(g.hi) > population.total()) {
    throw InputError("g-sweep: group size " + std::to_string(g.hi) + " exceeds the population size");
  }
  SweepTable table;
  std::ostringstream counts;
  counts << '[';
  for (int i = 0; i < population.types(); ++i) counts << (i ? "," : "") << population.count(i);
  counts << ']';
  table.metadata = {{"figure", "g-sweep"},
                    {"model", "without-replacement counts=" + counts.str()},
                    {"g_range", std::to_string(g.lo) + ".." + std::to_string(g.hi)}};
  table.columns = {"g", "exact_groups", "exact_individuals", "single_arrival_individuals", "cancellation_ratio"};

  const double single = sampling_expectation(population, 1, options).value;
  for (int size = g.lo; size <= g.hi; ++size) {
    const auto r = sampling_expectation(population, size, options);
    table.rows.push_back({static_cast<std::uint64_t>(size), r.value, size * r.value, single, r.cancellation_ratio});
  }
  return table;
}

SweepTable m_sweep(const MSweepConfig& config) {
  if (config.m.lo < 1) throw InputError("m-sweep: m starts at 1");
  SweepTable table;
  table.metadata = {{"figure", "m-sweep"},
                    {"model", "without-replacement g=" + std::to_string(config.group_size) + " mandelbrot c=" +
                                  format_real(config.c) + " theta=" + format_real(config.theta) +
                                  " N=" + std::to_string(config.population_size)},
                    {"m_range", std::to_string(config.m.lo) + ".." + std::to_string(config.m.hi)},
                    {"exact_cap", std::to_string(config.engine.exact_cap)},
                    {"seed", std::to_string(config.seed)}};
  table.columns = {"m", "exact_groups", "sim_mean", "sim_ci_low", "sim_ci_high", "trials", "seed"};

  for (int m = config.m.lo; m <= config.m.hi; ++m) {
    const auto p = mandelbrot_weights(m, config.c, config.theta);
    const auto model = GroupModel::without_replacement(population_from_weights(p, config.population_size),
                                                       config.group_size);
    std::vector<Cell> row{static_cast<std::uint64_t>(m)};
    if (m <= config.engine.exact_cap) {
      row.emplace_back(inclusion_exclusion_expectation(model, config.engine).value);
    } else {
      row.emplace_back(std::monostate{});
    }
    if (config.simulate) {
      const auto est = simulate_collection(model, config.trials, config.seed, config.sim);
      row.insert(row.end(), {est.mean, est.ci_low, est.ci_high, est.trials, est.seed});
    } else {
      row.insert(row.end(), 5, std::monostate{});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace coupon::cli
