#include "rslab/curve_io.hpp"

#include "rslab/error.hpp"

#include <fstream>

namespace rslab {

namespace {

cplx parse_complex(const nlohmann::json& j, const std::string& what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ValidationError(what + ": complex numbers are written [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

int parse_degree(const nlohmann::json& j, const std::string& type) {
    if (!j.contains("degree") || !j["degree"].is_number_integer()) {
        throw ValidationError(type + ": integer field \"degree\" is required");
    }
    return j["degree"].get<int>();
}

} // namespace

CurveModel parse_curve(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ValidationError("curve: string field \"type\" is required");
    }
    const auto type = j["type"].get<std::string>();
    if (type == "hyperelliptic") {
        if (!j.contains("branch_points") || !j["branch_points"].is_array()) {
            throw ValidationError("hyperelliptic: array field \"branch_points\" is required");
        }
        std::vector<cplx> pts;
        for (const auto& p : j["branch_points"]) pts.push_back(parse_complex(p, "hyperelliptic.branch_points"));
        cplx leading = 1.0;
        if (j.contains("leading")) leading = parse_complex(j["leading"], "hyperelliptic.leading");
        return HyperellipticCurve(std::move(pts), leading);
    }
    if (type == "plane") return PlaneCurveModel(parse_degree(j, type));
    if (type == "fermat") return FermatCurve(parse_degree(j, type));
    throw ValidationError("curve: unknown type \"" + type + "\" (expected hyperelliptic, plane or fermat)");
}

CurveModel load_curve(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open curve file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("curve file " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_curve(j);
}

nlohmann::json curve_to_json(const CurveModel& curve) {
    struct Visitor {
        nlohmann::json operator()(const HyperellipticCurve& c) const {
            auto pts = nlohmann::json::array();
            for (const auto& e : c.branch_points()) pts.push_back(complex_json(e));
            return {{"type", "hyperelliptic"}, {"branch_points", pts}, {"leading", complex_json(c.leading_coefficient())}};
        }
        nlohmann::json operator()(const PlaneCurveModel& c) const {
            return {{"type", "plane"}, {"degree", c.degree()}};
        }
        nlohmann::json operator()(const FermatCurve& c) const {
            return {{"type", "fermat"}, {"degree", c.degree()}};
        }
    };
    return std::visit(Visitor{}, curve);
}

} // namespace rslab
