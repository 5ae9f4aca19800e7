#pragma once

#include "rslab/curves.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace rslab {

/// Parses a curve description:
///   {"type": "hyperelliptic", "branch_points": [[re, im], ...], "leading": [re, im]}
///   {"type": "plane", "degree": d}
///   {"type": "fermat", "degree": d}
/// "leading" is optional and defaults to [1, 0]. Throws ValidationError naming
/// the violated rule.
CurveModel parse_curve(const nlohmann::json& j);
CurveModel load_curve(const std::filesystem::path& path);

/// Canonical JSON form; parse_curve(curve_to_json(c)) reproduces c exactly.
nlohmann::json curve_to_json(const CurveModel& curve);

} // namespace rslab
