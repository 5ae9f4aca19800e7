#include "rslab/period_io.hpp"

#include "rslab/error.hpp"
#include "rslab/text_io.hpp"

namespace rslab {

namespace {

nlohmann::json provenance_json(const Provenance& p) {
    nlohmann::json j = {{"source", p.source}, {"nodes", p.nodes}, {"est_error", p.est_error}};
    if (p.seed) j["seed"] = *p.seed;
    if (p.condition) j["condition"] = *p.condition;
    return j;
}

} // namespace

PeriodFile raw_period_file(const RawPeriodTable& table, const nlohmann::json& curve, const std::string& basis) {
    PeriodFile f;
    f.g = static_cast<int>(table.entries.cols());
    f.kind = "raw";
    f.entries = table.entries;
    f.meta = {{"curve", curve},
              {"nodes", table.quadrature_nodes},
              {"est_error", table.est_error},
              {"basis", basis},
              {"row_labels", table.row_labels},
              {"col_labels", table.col_labels}};
    return f;
}

PeriodFile normalized_period_file(const PeriodMatrix& m, const nlohmann::json& curve) {
    PeriodFile f;
    f.g = m.g();
    f.kind = "normalized";
    f.entries = m.entries;
    f.meta = provenance_json(m.provenance);
    f.meta["curve"] = curve;
    return f;
}

std::string serialize_periods(const PeriodFile& f) {
    std::string out = "{\n  \"g\": " + std::to_string(f.g) + ",\n  \"kind\": \"" + f.kind + "\",\n  \"entries\": [";
    for (Eigen::Index i = 0; i < f.entries.rows(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        for (Eigen::Index j = 0; j < f.entries.cols(); ++j) {
            if (j) out += ", ";
            out += "[" + format_double(f.entries(i, j).real()) + ", " + format_double(f.entries(i, j).imag()) + "]";
        }
        out += "]";
    }
    out += "\n  ],\n  \"meta\": " + f.meta.dump() + "\n}\n";
    return out;
}

PeriodFile parse_periods(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("periods: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("periods: top level must be an object");
    if (!j.contains("g") || !j["g"].is_number_integer()) throw ValidationError("periods: integer field \"g\" is required");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ValidationError("periods: string field \"kind\" is required");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty()) {
        throw ValidationError("periods: non-empty array field \"entries\" is required");
    }
    PeriodFile f;
    f.g = j["g"].get<int>();
    f.kind = j["kind"].get<std::string>();
    if (f.kind != "raw" && f.kind != "normalized") throw ValidationError("periods: kind must be raw or normalized");
    const auto& rows = j["entries"];
    const auto ncols = rows[0].is_array() ? rows[0].size() : 0;
    if (ncols == 0) throw ValidationError("periods: entries must be a non-empty matrix");
    f.entries.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != ncols) throw ValidationError("periods: entries rows must have equal length");
        for (std::size_t k = 0; k < ncols; ++k) {
            const auto& z = rows[i][k];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ValidationError("periods: each entry is written [re, im]");
            }
            f.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {z[0].get<double>(), z[1].get<double>()};
        }
    }
    if (static_cast<Eigen::Index>(f.g) != f.entries.cols()) throw ValidationError("periods: g must equal the column count");
    if (j.contains("meta")) f.meta = j["meta"];
    return f;
}

PeriodFile load_periods(const std::filesystem::path& path) { return parse_periods(read_file(path)); }

PeriodMatrix to_period_matrix(const PeriodFile& f) {
    if (f.entries.rows() != f.entries.cols()) {
        throw ValidationError("periods: a period matrix must be square, got " + std::to_string(f.entries.rows()) + "x" +
                              std::to_string(f.entries.cols()));
    }
    PeriodMatrix m;
    m.entries = f.entries;
    m.provenance.source = f.meta.value("source", std::string("file"));
    if (f.meta.contains("nodes") && f.meta["nodes"].is_number_integer()) m.provenance.nodes = f.meta["nodes"].get<int>();
    if (f.meta.contains("est_error") && f.meta["est_error"].is_number()) m.provenance.est_error = f.meta["est_error"].get<double>();
    return m;
}

std::vector<cplx> flatten(const PeriodFile& f) {
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(f.entries.size()));
    for (Eigen::Index i = 0; i < f.entries.rows(); ++i) {
        for (Eigen::Index j = 0; j < f.entries.cols(); ++j) out.push_back(f.entries(i, j));
    }
    return out;
}

} // namespace rslab
