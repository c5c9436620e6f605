#include "coupon/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coupon/errors.hpp"

namespace coupon {
namespace {

using nlohmann::json;

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("model: missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("model: field \"") + key + "\" has the wrong type");
  }
}

int integer_field(const json& j, const char* key) {
  const auto& v = j.contains(key) ? j.at(key) : json();
  if (!v.is_number_integer()) throw InputError(std::string("model: field \"") + key + "\" must be an integer");
  return v.get<int>();
}

struct Mandelbrot {
  std::vector<double> p;
  std::uint64_t population = 0;
  bool has_population = false;
};

Mandelbrot mandelbrot_field(const json& j) {
  const json& spec = j.at("mandelbrot");
  if (!spec.is_object()) throw InputError("model: \"mandelbrot\" must be an object");
  Mandelbrot out;
  out.p = mandelbrot_weights(integer_field(spec, "m"), field<double>(spec, "c"), field<double>(spec, "theta"));
  if (spec.contains("N")) {
    const auto& n = spec.at("N");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 1) throw InputError("model: mandelbrot N must be a positive integer");
    out.population = n.get<std::uint64_t>();
    out.has_population = true;
  }
  return out;
}

std::vector<double> type_probabilities(const json& j) {
  if (j.contains("p")) return field<std::vector<double>>(j, "p");
  if (j.contains("mandelbrot")) return mandelbrot_field(j).p;
  throw InputError("model: expected \"p\" or \"mandelbrot\"");
}

}  // namespace

GroupModel parse_model_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("model: top level must be a JSON object");

  int sources = 0;
  for (const char* key : {"counts", "p", "q", "mandelbrot"}) sources += j.contains(key) ? 1 : 0;
  if (sources > 1) throw InputError("model: give only one of \"counts\", \"p\", \"q\", \"mandelbrot\"");

  const auto kind = field<std::string>(j, "model");
  const int g = integer_field(j, "g");

  if (kind == "uniform-distinct") {
    return GroupModel::uniform_distinct(integer_field(j, "m"), g);
  }
  if (kind == "weighted-distinct") {
    auto q = field<std::vector<double>>(j, "q");
    int m = 0;
    if (j.contains("m")) {
      m = integer_field(j, "m");
    } else {
      // C(m, g) grows strictly with m > g, so the weight count fixes m.
      for (int cand = std::max(g + 1, 2); cand <= kMaxTypes && m == 0; ++cand) {
        if (binomial(cand, g) == static_cast<double>(q.size())) m = cand;
      }
      if (m == 0) throw InputError("model: length of \"q\" is not C(m, g) for any m");
    }
    return GroupModel::weighted_distinct(m, g, std::move(q));
  }
  if (kind == "iid-within-group") return GroupModel::iid_within_group(type_probabilities(j), g);
  if (kind == "draft-lottery") return GroupModel::draft_lottery(type_probabilities(j), g);
  if (kind == "without-replacement") {
    if (j.contains("counts")) {
      const auto& counts = j.at("counts");
      if (!counts.is_array()) throw InputError("model: \"counts\" must be an array of positive integers");
      std::vector<std::uint64_t> values;
      for (const auto& c : counts) {
        if (!c.is_number_integer() || c.get<std::int64_t>() < 1) {
          throw InputError("model: \"counts\" must be an array of positive integers");
        }
        values.push_back(c.get<std::uint64_t>());
      }
      return GroupModel::without_replacement(Population(std::move(values)), g);
    }
    if (j.contains("mandelbrot")) {
      const auto mb = mandelbrot_field(j);
      if (!mb.has_population) throw InputError("model: without-replacement mandelbrot needs \"N\"");
      return GroupModel::without_replacement(population_from_weights(mb.p, mb.population), g);
    }
    throw InputError("model: without-replacement needs \"counts\" or \"mandelbrot\"");
  }
  throw InputError("model: unknown variant \"" + kind +
                   "\" (expected uniform-distinct, weighted-distinct, iid-within-group, without-replacement, "
                   "draft-lottery)");
}

GroupModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

}  // namespace coupon
