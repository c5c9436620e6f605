#pragma once

#include <string>
#include <string_view>

#include "coupon/group_model.hpp"

namespace coupon {

/// Parses the JSON model description:
///
///   { "model": "without-replacement", "g": 2, "counts": [10, 100, 500, 1000] }
///
/// "model" is one of uniform-distinct, weighted-distinct, iid-within-group,
/// without-replacement, draft-lottery. The type weights come from exactly one
/// of "counts", "p", "q" or "mandelbrot": {"m", "c", "theta", "N"}.
/// uniform-distinct takes "m" instead. Throws InputError on any violation.
GroupModel parse_model_json(std::string_view text);

GroupModel load_model_file(const std::string& path);

}  // namespace coupon
