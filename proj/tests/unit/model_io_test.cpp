#include <doctest.h>

#include "coupon/errors.hpp"
#include "coupon/model_io.hpp"

using namespace coupon;

TEST_CASE("parse each model variant") {
  const auto wr = parse_model_json(R"({"model": "without-replacement", "g": 2, "counts": [10, 100, 500, 1000]})");
  CHECK(wr.kind() == ModelKind::kWithoutReplacement);
  CHECK(std::get<WithoutReplacement>(wr.params()).population == Population({10, 100, 500, 1000}));
  CHECK(wr.group_size() == 2);

  const auto uni = parse_model_json(R"({"model": "uniform-distinct", "g": 2, "m": 4})");
  CHECK(uni.kind() == ModelKind::kUniformDistinct);
  CHECK(uni.types() == 4);

  const auto weighted = parse_model_json(R"({"model": "weighted-distinct", "g": 2, "q": [0.1, 0.2, 0.3, 0.4, 0.0, 0.0]})");
  CHECK(weighted.types() == 4);

  const auto iid = parse_model_json(R"({"model": "iid-within-group", "g": 3, "p": [0.25, 0.75]})");
  CHECK(iid.kind() == ModelKind::kIidWithinGroup);

  const auto draft = parse_model_json(
      R"({"model": "draft-lottery", "g": 2, "mandelbrot": {"m": 6, "c": 0.3, "theta": 1.75}})");
  CHECK(draft.kind() == ModelKind::kDraftLottery);
  CHECK(draft.types() == 6);

  const auto mb = parse_model_json(
      R"({"model": "without-replacement", "g": 2, "mandelbrot": {"m": 8, "c": 0.3, "theta": 1.75, "N": 1000}})");
  CHECK(std::get<WithoutReplacement>(mb.params()).population.total() == 1000);
}

TEST_CASE("malformed models are input errors") {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"g": 2, "counts": [1, 2]})",
      R"({"model": "without-replacement", "counts": [1, 2]})",
      R"({"model": "without-replacement", "g": 2.5, "counts": [1, 2]})",
      R"({"model": "without-replacement", "g": 2, "counts": [1, 0]})",
      R"({"model": "without-replacement", "g": 2, "counts": [1, -3]})",
      R"({"model": "without-replacement", "g": 2, "p": [0.5, 0.5]})",
      R"({"model": "without-replacement", "g": 2, "mandelbrot": {"m": 3, "c": 0.3, "theta": 1.5}})",
      R"({"model": "iid-within-group", "g": 2, "p": [0.5, 0.6]})",
      R"({"model": "iid-within-group", "g": 2, "p": [0.5, 0.5], "counts": [1, 1]})",
      R"({"model": "weighted-distinct", "g": 2, "q": [0.5, 0.5]})",
      R"({"model": "draft-lottery", "g": 2, "mandelbrot": {"m": 6, "c": 0.3, "theta": 2.5}})",
      R"({"model": "uniform-distinct", "g": 4, "m": 4})",
      R"({"model": "poisson", "g": 1, "p": [1.0]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_model_json(text), InputError);
  }
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), InputError);
}
