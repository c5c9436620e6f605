#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coupon/coupon.hpp"
#include "sweep.hpp"

namespace coupon::cli {
namespace {

struct Options {
  std::string model_path;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool json = false;
  std::string out_path;
  std::string g_range = "1..15";
  std::string m_range = "5..20";
  std::uint64_t population_size = 1000;
  double mandelbrot_c = 0.30;
  double theta = 1.75;
  bool no_simulate = false;
  int exact_cap = kDefaultExactCap;
  std::string figure;
};

void print_exact(const GroupModel& model, const ExpectationResult& r, bool json, std::ostream& os) {
  if (json) {
    nlohmann::ordered_json j;
    j["model"] = model.describe();
    j["value"] = r.value;
    j["terms_evaluated"] = r.terms_evaluated;
    j["cancellation_ratio"] = r.cancellation_ratio;
    j["truncated_at"] = r.truncated_at;
    os << j.dump(2) << '\n';
    return;
  }
  os << "model: " << model.describe() << '\n'
     << "value: " << format_real(r.value) << '\n'
     << "terms_evaluated: " << r.terms_evaluated << '\n'
     << "cancellation_ratio: " << format_real(r.cancellation_ratio) << '\n'
     << "truncated_at: " << r.truncated_at << '\n';
}

void print_simulation(const GroupModel& model, const SimEstimate& est, bool json, std::ostream& os) {
  if (json) {
    nlohmann::ordered_json j;
    j["model"] = model.describe();
    j["mean"] = est.mean;
    j["std_error"] = est.std_error;
    j["ci_low"] = est.ci_low;
    j["ci_high"] = est.ci_high;
    j["trials"] = est.trials;
    j["seed"] = est.seed;
    os << j.dump(2) << '\n';
    return;
  }
  os << "model: " << model.describe() << '\n'
     << "mean: " << format_real(est.mean) << '\n'
     << "std_error: " << format_real(est.std_error) << '\n'
     << "ci_low: " << format_real(est.ci_low) << '\n'
     << "ci_high: " << format_real(est.ci_high) << '\n'
     << "trials: " << est.trials << '\n'
     << "seed: " << est.seed << '\n';
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Population default_g_sweep_population() { return Population({10, 100, 500, 1000}); }

int dispatch(const std::string& command, const Options& opt, std::ostream& os) {
  const EngineOptions engine{opt.exact_cap};
  const SimOptions sim{opt.workers, kDefaultDrawCap};

  if (command == "exact") {
    const auto model = load_model_file(opt.model_path);
    print_exact(model, inclusion_exclusion_expectation(model, engine), opt.json, os);
  } else if (command == "simulate") {
    if (opt.trials < 1) throw InputError("--trials must be at least 1");
    const auto model = load_model_file(opt.model_path);
    print_simulation(model, simulate_collection(model, opt.trials, opt.seed, sim), opt.json, os);
  } else {
    SweepTable table;
    if (opt.figure == "g-sweep") {
      Population population = default_g_sweep_population();
      if (!opt.model_path.empty()) {
        const auto model = load_model_file(opt.model_path);
        const auto* wr = std::get_if<WithoutReplacement>(&model.params());
        if (wr == nullptr) throw InputError("g-sweep needs a without-replacement model");
        population = wr->population;
      }
      table = g_sweep(population, parse_range(opt.g_range), engine);
    } else {
      MSweepConfig config;
      config.m = parse_range(opt.m_range);
      config.c = opt.mandelbrot_c;
      config.theta = opt.theta;
      config.population_size = opt.population_size;
      config.trials = opt.trials;
      config.seed = opt.seed;
      config.simulate = !opt.no_simulate;
      config.engine = engine;
      config.sim = sim;
      if (config.simulate && config.trials < 1) throw InputError("--trials must be at least 1");
      table = m_sweep(config);
    }
    table.metadata.emplace_back("generated", utc_timestamp());
    write_csv(table, os);
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected waiting times for coupon collection with group arrivals"};
  app.name("coupon");
  app.require_subcommand(1, 1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
  };
  auto exact_cap = [&](CLI::App* sub) {
    sub->add_option("--exact-cap", opt.exact_cap, "Largest m evaluated exactly")
        ->check(CLI::Range(1, kMaxExactCap))
        ->capture_default_str();
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--trials", opt.trials, "Monte Carlo trials")->capture_default_str();
    sub->add_option("--seed", opt.seed, "Philox4x32-10 key")->capture_default_str();
    sub->add_option("--workers", opt.workers, "Simulation threads (0 = all cores); does not change results")
        ->capture_default_str();
  };

  auto* exact = app.add_subcommand("exact", "Exact expected number of groups by inclusion-exclusion");
  exact->add_option("--model", opt.model_path, "Model JSON file")->required();
  exact->add_flag("--json", opt.json, "Emit JSON");
  exact_cap(exact);
  common(exact);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate with a 95% confidence interval");
  simulate->add_option("--model", opt.model_path, "Model JSON file")->required();
  simulate->add_flag("--json", opt.json, "Emit JSON");
  sampling(simulate);
  common(simulate);

  auto* figure = app.add_subcommand("figure", "Parameter sweeps as CSV");
  figure->add_option("name", opt.figure, "g-sweep or m-sweep")->required()->check(CLI::IsMember({"g-sweep", "m-sweep"}));
  figure->add_option("--model", opt.model_path, "g-sweep: without-replacement model supplying the counts");
  figure->add_option("--g-range", opt.g_range, "g-sweep group sizes a..b")->capture_default_str();
  figure->add_option("--m-range", opt.m_range, "m-sweep type counts a..b")->capture_default_str();
  figure->add_option("--population-size", opt.population_size, "m-sweep population size N")->capture_default_str();
  figure->add_option("--mandelbrot-c", opt.mandelbrot_c, "m-sweep Mandelbrot offset c")->capture_default_str();
  figure->add_option("--theta", opt.theta, "m-sweep Mandelbrot exponent")->capture_default_str();
  figure->add_flag("--no-simulate", opt.no_simulate, "m-sweep: leave the simulated columns empty");
  sampling(figure);
  exact_cap(figure);
  common(figure);

  std::vector<const char*> argv{"coupon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::ostringstream buffer;
    const int code = dispatch(command, opt, buffer);
    if (opt.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file) throw InputError("cannot write " + opt.out_path);
      file << buffer.str();
    }
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
}

}  // namespace coupon::cli
