#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "coupon/errors.hpp"
#include "csv_reader.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

namespace fs = std::filesystem;
using namespace coupon;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_model(const std::string& name, const std::string& json) {
  const auto path = fs::temp_directory_path() / ("coupon_cli_test_" + name + ".json");
  std::ofstream(path) << json;
  return path.string();
}

const std::string kRareTypeModel = R"({"model": "without-replacement", "g": 2, "counts": [10, 100, 500, 1000]})";

}  // namespace

TEST_CASE("exact subcommand") {
  const auto path = write_model("rare_type", kRareTypeModel);
  const auto r = run({"exact", "--model", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 81.4669455124062") != std::string::npos);
  CHECK(r.out.find("terms_evaluated: 15") != std::string::npos);

  const auto j = run({"exact", "--model", path, "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"value\": 81.4669455124062") != std::string::npos);

  const auto one = run({"exact", "--model", write_model("one", R"({"model": "without-replacement", "g": 1, "counts": [1]})")});
  CHECK(one.code == 0);
  CHECK(one.out.find("value: 1\n") != std::string::npos);

  const auto uni = run({"exact", "--model", write_model("uni", R"({"model": "uniform-distinct", "g": 2, "m": 4})")});
  CHECK(uni.out.find("value: 3.80000000000000") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"exact"}).code == 2);
  CHECK(run({"exact", "--model", "/nonexistent.json"}).code == 2);
  CHECK(run({"exact", "--model", write_model("bad", "{")}).code == 2);
  CHECK(run({"simulate", "--model", write_model("rare_type", kRareTypeModel), "--trials", "0"}).code == 2);
  CHECK(run({"figure", "triangle"}).code == 2);
  CHECK(run({"figure", "g-sweep", "--g-range", "3..1"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto divergent = write_model("div", R"({"model": "iid-within-group", "g": 2, "p": [1.0, 0.0]})");
  const auto d = run({"exact", "--model", divergent});
  CHECK(d.code == 3);
  CHECK(d.err.find("{2}") != std::string::npos);
  CHECK(run({"simulate", "--model", divergent, "--trials", "10"}).code == 3);

  const auto big = write_model("big", R"({"model": "uniform-distinct", "g": 2, "m": 10})");
  const auto c = run({"exact", "--model", big, "--exact-cap", "8"});
  CHECK(c.code == 3);
  CHECK(c.err.find("cap of 8") != std::string::npos);
}

TEST_CASE("simulate output is deterministic across runs and worker counts") {
  const auto path = write_model("rare_type", kRareTypeModel);
  const auto a = run({"simulate", "--model", path, "--trials", "20000", "--seed", "9", "--workers", "1"});
  const auto b = run({"simulate", "--model", path, "--trials", "20000", "--seed", "9", "--workers", "1"});
  const auto c = run({"simulate", "--model", path, "--trials", "20000", "--seed", "9", "--workers", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("seed: 9") != std::string::npos);

  const auto one = run({"simulate", "--model", write_model("one", R"({"model": "iid-within-group", "g": 1, "p": [1.0]})")});
  CHECK(one.out.find("mean: 1\n") != std::string::npos);
  CHECK(one.out.find("ci_low: 1\n") != std::string::npos);
  CHECK(one.out.find("ci_high: 1\n") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const auto out_path = (fs::temp_directory_path() / "coupon_cli_test_out.txt").string();
  const auto r = run({"exact", "--model", write_model("rare_type", kRareTypeModel), "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("value: 81.4669455124062") != std::string::npos);
}

TEST_CASE("g-sweep CSV") {
  const auto r = run({"figure", "g-sweep"});
  REQUIRE(r.code == 0);
  const auto csv = testing::read_csv(r.out);
  CHECK(csv.columns ==
        std::vector<std::string>{"g", "exact_groups", "exact_individuals", "single_arrival_individuals",
                                 "cancellation_ratio"});
  REQUIRE(csv.rows.size() == 15);
  CHECK(csv.metadata.at("figure") == "g-sweep");
  CHECK(csv.metadata.count("generated") == 1);

  const double baseline = testing::single_arrival_direct({10.0 / 1610, 100.0 / 1610, 500.0 / 1610, 1000.0 / 1610});
  CHECK(csv.rows[0][1] == doctest::Approx(baseline).epsilon(1e-9));
  CHECK(csv.rows[1][1] == doctest::Approx(81.466945512406).epsilon(1e-12));
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    CHECK(csv.rows[i][0] == static_cast<double>(i + 1));
    CHECK(csv.rows[i][3] == csv.rows[0][2]);
    if (i > 0) CHECK(csv.rows[i][2] >= csv.rows[i - 1][2]);
  }

  const auto custom = run({"figure", "g-sweep", "--model", write_model("small", R"({"model": "without-replacement", "g": 1, "counts": [1, 1, 2]})"),
                           "--g-range", "1..4"});
  CHECK(custom.code == 0);
  CHECK(testing::read_csv(custom.out).rows.size() == 4);
  CHECK(run({"figure", "g-sweep", "--model", write_model("small", R"({"model": "without-replacement", "g": 1, "counts": [1, 1, 2]})"),
             "--g-range", "1..5"}).code == 2);
}

TEST_CASE("m-sweep CSV") {
  const auto r = run({"figure", "m-sweep", "--m-range", "5..7", "--trials", "2000", "--seed", "3"});
  REQUIRE(r.code == 0);
  const auto csv = testing::read_csv(r.out);
  CHECK(csv.columns ==
        std::vector<std::string>{"m", "exact_groups", "sim_mean", "sim_ci_low", "sim_ci_high", "trials", "seed"});
  REQUIRE(csv.rows.size() == 3);
  for (const auto& row : csv.rows) {
    CHECK(row[5] == 2000.0);
    CHECK(row[6] == 3.0);
    CHECK(row[3] <= row[2]);
    CHECK(row[2] <= row[4]);
  }

  // Above the exact cap the exact column is blank but simulation still runs.
  const auto capped = run({"figure", "m-sweep", "--m-range", "5..6", "--exact-cap", "5", "--trials", "500"});
  REQUIRE(capped.code == 0);
  const auto rows = testing::read_csv(capped.out).rows;
  CHECK(!std::isnan(rows[0][1]));
  CHECK(std::isnan(rows[1][1]));
  CHECK(!std::isnan(rows[1][2]));

  const auto nosim = run({"figure", "m-sweep", "--m-range", "5..5", "--no-simulate"});
  CHECK(std::isnan(testing::read_csv(nosim.out).rows[0][2]));
}

TEST_CASE("CSV cells round-trip exactly") {
  cli::SweepTable table;
  table.columns = {"a", "b", "c"};
  table.rows = {{std::uint64_t{18446744073709551615ULL}, 0.1, std::monostate{}},
                {std::uint64_t{0}, 81.466945512406284, 1.0 / 3.0},
                {std::uint64_t{7}, 1e-300, 6.02214076e23}};
  std::ostringstream os;
  cli::write_csv(table, os);
  const auto csv = testing::read_csv(os.str());
  REQUIRE(csv.raw.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& cell = table.rows[r][c];
      if (const auto* d = std::get_if<double>(&cell)) {
        CHECK(std::strtod(csv.raw[r][c].c_str(), nullptr) == *d);
      } else if (const auto* i = std::get_if<std::uint64_t>(&cell)) {
        CHECK(std::stoull(csv.raw[r][c]) == *i);
      } else {
        CHECK(csv.raw[r][c].empty());
      }
    }
  }
}

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("1..15").lo == 1);
  CHECK(cli::parse_range("1..15").hi == 15);
  CHECK_THROWS_AS(cli::parse_range("1-15"), InputError);
  CHECK_THROWS_AS(cli::parse_range("a..3"), InputError);
  CHECK_THROWS_AS(cli::parse_range("4..3"), InputError);
}
