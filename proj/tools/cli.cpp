#include "cli.hpp"

#include "rslab/curve_io.hpp"
#include "rslab/error.hpp"
#include "rslab/modsel.hpp"
#include "rslab/period_io.hpp"
#include "rslab/periods.hpp"
#include "rslab/perstats.hpp"
#include "rslab/siegel.hpp"
#include "rslab/text_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>

namespace rslab::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string curve_path, out_path, in_path, kind, model, curve_model_path;
    std::string spectrum_path, hist_path, fit_path, stats_path;
    int nodes = 256;
    int max_nodes = 8192;
    double quad_tol = 1e-10;
    int g = 0;
    int bins = 36;
    std::size_t k = 0;
    double p = 0.5, tol = 1e-8, scale = 1.0;
    std::uint64_t trials = 10000, seed = 0;
};

json stats_json(const SuccessStats& s) {
    return {{"trials", s.trials},
            {"successes", s.successes},
            {"nonsingular_count", s.nonsingular_count},
            {"estimate", s.estimate},
            {"standard_error", s.standard_error()},
            {"ci95_halfwidth", s.ci95_halfwidth}};
}

json bounds_json(int g) {
    json arr = json::array();
    for (const auto& b : probability_bounds(g)) {
        arr.push_back({{"label", b.label}, {"value", b.value}, {"heuristic", b.heuristic}, {"description", b.description}});
    }
    return arr;
}

PlaneCurveModel plane_model(const Options& o) {
    if (!o.curve_model_path.empty()) {
        const auto curve = load_curve(o.curve_model_path);
        if (const auto* m = std::get_if<PlaneCurveModel>(&curve)) return *m;
        throw ValidationError("select: curve file must describe a plane model");
    }
    if (o.model == "quartic") return PlaneCurveModel(4);
    if (o.model == "quintic") return PlaneCurveModel(5);
    throw ValidationError("model must be quartic or quintic");
}

void write_json_file(const std::string& path, const json& j) { write_file_atomic(path, j.dump(2) + "\n"); }

RawPeriodTable select_rows(const RawPeriodTable& all, const FermatPeriods& chosen) {
    RawPeriodTable t;
    t.col_labels = all.col_labels;
    t.entries = chosen.entries;
    for (const auto& [a, b] : chosen.cycles) {
        t.row_labels.push_back(all.row_labels[static_cast<std::size_t>(a * chosen.degree + b)]);
    }
    return t;
}

int cmd_periods(const Options& o, std::ostream& out) {
    const CurveModel curve = load_curve(o.curve_path);
    const json curve_json = curve_to_json(curve);
    PeriodFile file;
    std::string basis;
    if (const auto* h = std::get_if<HyperellipticCurve>(&curve)) {
        const std::string kind = o.kind.empty() ? "normalized" : o.kind;
        const PeriodData data = hyperelliptic_raw_periods_adaptive(*h, {o.nodes, o.quad_tol, std::max(o.nodes, o.max_nodes)});
        if (data.table.est_error > o.quad_tol) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "periods: quadrature did not converge (est_error %.3g > %.3g at %d nodes)",
                          data.table.est_error, o.quad_tol, data.table.quadrature_nodes);
            throw NumericError(buf);
        }
        if (kind == "normalized") {
            PeriodMatrix m = normalize(data.table, data.homology);
            m.provenance.source = "hyperelliptic_quadrature";
            file = normalized_period_file(m, curve_json);
        } else if (kind == "raw") {
            file = raw_period_file(data.table, curve_json, basis = "segment_chain");
        } else {
            file = raw_period_file(symplectic_periods(data.table, data.homology), curve_json, basis = "symplectic");
        }
    } else if (const auto* f = std::get_if<FermatCurve>(&curve)) {
        const std::string kind = o.kind.empty() ? "raw" : o.kind;
        const PeriodData data = fermat_period_data(f->degree());
        if (kind == "normalized") {
            PeriodMatrix m = normalize(data.table, data.homology);
            m.provenance.source = "fermat_closed_form";
            file = normalized_period_file(m, curve_json);
        } else if (kind == "raw") {
            file = raw_period_file(select_rows(data.table, fermat_raw_periods(f->degree())), curve_json,
                                   basis = "greedy_translates");
        } else {
            file = raw_period_file(symplectic_periods(data.table, data.homology), curve_json, basis = "symplectic");
        }
    } else {
        throw UnsupportedError("periods: only hyperelliptic and fermat curves have a period computation");
    }
    write_file_atomic(o.out_path, serialize_periods(file));
    json summary = {{"command", "periods"},
                    {"g", file.g},
                    {"kind", file.kind},
                    {"rows", file.entries.rows()},
                    {"nodes", file.meta.value("nodes", 0)},
                    {"est_error", file.meta.value("est_error", 0.0)},
                    {"out", o.out_path}};
    if (!basis.empty()) summary["basis"] = basis;
    if (file.meta.contains("condition")) summary["condition"] = file.meta["condition"];
    out << summary.dump() << "\n";
    return ok;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const PeriodMatrix m = to_period_matrix(load_periods(o.in_path));
    const SiegelValidation v = validate_siegel(m, o.tol);
    out << json{{"command", "validate"},
                {"g", m.g()},
                {"symmetry_residual", v.symmetry_residual},
                {"min_im_eigenvalue", v.min_im_eigenvalue},
                {"tolerance", v.tolerance},
                {"is_member", v.is_member}}
               .dump()
        << "\n";
    return v.is_member ? ok : not_member;
}

int cmd_select(const Options& o, std::ostream& out) {
    const PlaneCurveModel model = plane_model(o);
    const MonteCarloResult run = monte_carlo_run(model, o.p, o.trials, o.seed);
    std::string csv = "trial_index,seed,nonsingular,span_rank,success\n";
    for (const auto& r : run.records) {
        csv += std::to_string(r.trial_index) + "," + std::to_string(r.seed) + "," + (r.matrix_nonsingular ? "1" : "0") +
               "," + std::to_string(r.span_rank) + "," + (r.success ? "1" : "0") + "\n";
    }
    json summary = stats_json(run.stats);
    summary["degree"] = model.degree();
    summary["g"] = model.genus();
    summary["p"] = o.p;
    summary["seed"] = o.seed;
    summary["bounds"] = bounds_json(model.genus());
    write_file_atomic(o.out_path, csv);
    if (!o.stats_path.empty()) write_json_file(o.stats_path, summary);
    summary["command"] = "select";
    summary["out"] = o.out_path;
    out << summary.dump() << "\n";
    return ok;
}

int cmd_exhaustive(const Options& o, std::ostream& out) {
    const PlaneCurveModel model = plane_model(o);
    json summary = stats_json(exhaustive(model));
    summary["degree"] = model.degree();
    summary["g"] = model.genus();
    if (!o.out_path.empty()) write_json_file(o.out_path, summary);
    summary["command"] = "exhaustive";
    out << summary.dump() << "\n";
    return ok;
}

int cmd_singularity(const Options& o, std::ostream& out) {
    const SuccessStats s = singularity_rate(o.g, o.p, o.trials, o.seed);
    json summary = {{"g", o.g},
                    {"p", o.p},
                    {"seed", o.seed},
                    {"trials", s.trials},
                    {"singular", s.successes},
                    {"nonsingular", s.nonsingular_count},
                    {"singular_rate", s.estimate},
                    {"standard_error", s.standard_error()},
                    {"ci95_halfwidth", s.ci95_halfwidth}};
    if (!o.out_path.empty()) write_json_file(o.out_path, summary);
    summary["command"] = "singularity";
    out << summary.dump() << "\n";
    return ok;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const PeriodFile file = load_periods(o.in_path);
    const std::vector<cplx> values = flatten(file);
    const Spectrum s = spectrum(values);
    json source = {{"kind", file.kind}};
    if (file.meta.contains("basis")) source["basis"] = file.meta["basis"];
    if (file.meta.contains("curve")) source["curve"] = file.meta["curve"];

    json summary = {{"command", "stats"}, {"source", source}, {"source_count", s.source_count}};
    const BandLimitScore band = band_limit_score(values);
    summary["band_limit"] = {{"r4", band.r4}, {"score", band.score}};
    const std::size_t positive = static_cast<std::size_t>(std::count_if(s.values.begin(), s.values.end(), [](double v) { return v > 0.0; }));
    if (positive > 0) {
        summary["dynamic_range"] = s.values.front() / s.values[positive - 1];
    }
    if (positive >= 3 || !o.fit_path.empty()) {
        const PowerLawFit fit = fit_power_law(s);
        json fj = {{"exponent", fit.exponent},
                   {"intercept", fit.intercept},
                   {"r_squared", fit.r_squared},
                   {"excluded_zeros", fit.excluded_zeros}};
        if (!o.fit_path.empty()) {
            json file_json = fj;
            file_json["source"] = source;
            write_json_file(o.fit_path, file_json);
        }
        summary["fit"] = fj;
    }
    if (o.k > 0) summary["best_k_energy"] = {{"k", o.k}, {"energy", best_k_energy(s, o.k)}};
    if (!o.spectrum_path.empty()) {
        std::string csv = "rank,squared_modulus\n";
        for (std::size_t i = 0; i < s.values.size(); ++i) csv += std::to_string(i + 1) + "," + format_double(s.values[i]) + "\n";
        write_file_atomic(o.spectrum_path, csv);
    }
    if (!o.hist_path.empty()) {
        std::string csv = "bin_center,count\n";
        for (const auto& b : arg_histogram(values, o.bins)) csv += format_double(b.center) + "," + std::to_string(b.count) + "\n";
        write_file_atomic(o.hist_path, csv);
    }
    out << summary.dump() << "\n";
    return ok;
}

int cmd_siegel_sample(const Options& o, std::ostream& out) {
    const PeriodMatrix m = random_siegel(o.g, o.seed, o.scale);
    write_file_atomic(o.out_path, serialize_periods(normalized_period_file(m, nullptr)));
    out << json{{"command", "siegel-sample"}, {"g", o.g}, {"seed", o.seed}, {"scale", o.scale}, {"out", o.out_path}}.dump()
        << "\n";
    return ok;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    json summary = {{"g", o.g}, {"moduli_count", moduli_count(o.g)}, {"bounds", bounds_json(o.g)}};
    if (!o.out_path.empty()) write_json_file(o.out_path, summary);
    summary["command"] = "bounds";
    out << summary.dump() << "\n";
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Period matrices, Siegel validation, Bernoulli moduli selection and period statistics", "rslab"};
    app.require_subcommand(1, 1);
    Options o;

    auto* periods = app.add_subcommand("periods", "Compute raw or normalized periods of a curve file");
    periods->add_option("--curve", o.curve_path, "Curve description JSON")->required()->check(CLI::ExistingFile);
    periods->add_option("--nodes", o.nodes, "Initial quadrature node count")->check(CLI::Range(4, 1 << 20));
    periods->add_option("--max-nodes", o.max_nodes, "Node count cap for doubling")->check(CLI::Range(4, 1 << 20));
    periods->add_option("--quad-tol", o.quad_tol, "Node-doubling tolerance")->check(CLI::PositiveNumber);
    periods->add_option("--out", o.out_path, "Periods JSON output")->required();
    periods->add_option("--kind", o.kind, "raw, symplectic or normalized")
        ->check(CLI::IsMember({"raw", "symplectic", "normalized"}));

    auto* validate = app.add_subcommand("validate", "Check Siegel upper half-space membership of a periods file");
    validate->add_option("file", o.in_path, "Periods JSON")->required()->check(CLI::ExistingFile);
    validate->add_option("--tol", o.tol, "Symmetry tolerance")->check(CLI::PositiveNumber);

    auto add_model = [&](CLI::App* sub) {
        auto* model = sub->add_option("--model", o.model, "quartic or quintic")->check(CLI::IsMember({"quartic", "quintic"}));
        auto* file = sub->add_option("--curve", o.curve_model_path, "Plane curve JSON")->check(CLI::ExistingFile);
        model->excludes(file);
        sub->callback([model, file] {
            if (model->count() + file->count() == 0) throw CLI::RequiredError("--model or --curve");
        });
    };

    auto* select = app.add_subcommand("select", "Monte Carlo of the Bernoulli product-span test");
    add_model(select);
    select->add_option("--p", o.p, "Bernoulli parameter")->check(CLI::Range(0.0, 1.0));
    select->add_option("--trials", o.trials, "Number of trials")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    select->add_option("--seed", o.seed, "Master seed")->required();
    select->add_option("--out", o.out_path, "Trial log CSV")->required();
    select->add_option("--stats", o.stats_path, "Summary JSON");

    auto* exh = app.add_subcommand("exhaustive", "Enumerate every 0/1 matrix (genus <= 3)");
    add_model(exh);
    exh->add_option("--out", o.out_path, "Summary JSON");

    auto* sing = app.add_subcommand("singularity", "Monte Carlo singularity rate of g x g Bernoulli matrices");
    sing->add_option("--g", o.g, "Matrix size")->required()->check(CLI::Range(1, 64));
    sing->add_option("--p", o.p, "Bernoulli parameter")->check(CLI::Range(0.0, 1.0));
    sing->add_option("--trials", o.trials, "Number of draws")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    sing->add_option("--seed", o.seed, "Master seed")->required();
    sing->add_option("--out", o.out_path, "Summary JSON");

    auto* stats = app.add_subcommand("stats", "Spectrum, power-law fit and band-limit score of a periods file");
    stats->add_option("--in", o.in_path, "Periods JSON")->required()->check(CLI::ExistingFile);
    stats->add_option("--spectrum", o.spectrum_path, "Spectrum CSV output");
    stats->add_option("--hist", o.hist_path, "Argument histogram CSV output");
    stats->add_option("--bins", o.bins, "Histogram bins")->check(CLI::Range(2, 100000));
    stats->add_option("--fit", o.fit_path, "Power-law fit JSON output");
    stats->add_option("--k", o.k, "Report best-k energy")->check(CLI::PositiveNumber);

    auto* sample = app.add_subcommand("siegel-sample", "Random element of the Siegel upper half-space");
    sample->add_option("--g", o.g, "Genus")->required()->check(CLI::Range(1, 256));
    sample->add_option("--seed", o.seed, "Seed")->required();
    sample->add_option("--scale", o.scale, "Entry range")->check(CLI::PositiveNumber);
    sample->add_option("--out", o.out_path, "Periods JSON output")->required();

    auto* bounds = app.add_subcommand("bounds", "Evaluate the probability expressions for genus g");
    bounds->add_option("--g", o.g, "Genus")->required()->check(CLI::Range(2, 1000));
    bounds->add_option("--out", o.out_path, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage_error;
    }

    try {
        if (periods->parsed()) return cmd_periods(o, out);
        if (validate->parsed()) return cmd_validate(o, out);
        if (select->parsed()) return cmd_select(o, out);
        if (exh->parsed()) return cmd_exhaustive(o, out);
        if (sing->parsed()) return cmd_singularity(o, out);
        if (stats->parsed()) return cmd_stats(o, out);
        if (sample->parsed()) return cmd_siegel_sample(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return numeric_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

} // namespace rslab::cli
