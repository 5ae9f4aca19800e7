#pragma once

#include "rslab/periods.hpp"

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace rslab {

/// Contents of a periods file:
///   {"g": int, "kind": "raw" | "normalized",
///    "entries": [[[re, im], ...], ...], "meta": {"curve": ..., "nodes": int, "est_error": float, ...}}
/// Entries are row-major and written with 17 significant digits.
struct PeriodFile {
    int g = 0;
    std::string kind;
    Eigen::MatrixXcd entries;
    nlohmann::json meta = nlohmann::json::object();
};

PeriodFile raw_period_file(const RawPeriodTable& table, const nlohmann::json& curve, const std::string& basis);
PeriodFile normalized_period_file(const PeriodMatrix& m, const nlohmann::json& curve);

std::string serialize_periods(const PeriodFile& f);

/// Throws ValidationError naming the malformed field.
PeriodFile parse_periods(const std::string& text);
PeriodFile load_periods(const std::filesystem::path& path);

/// The entries as a candidate period matrix; throws ValidationError unless square.
PeriodMatrix to_period_matrix(const PeriodFile& f);

/// Row-major flattening of the entries.
std::vector<cplx> flatten(const PeriodFile& f);

} // namespace rslab
