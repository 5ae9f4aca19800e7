#include "rslab/modsel.hpp"

#include "rslab/error.hpp"
#include "rslab/exact.hpp"
#include "rslab/rng.hpp"

#include <cmath>

namespace rslab {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Bernoulli parameter p must lie in [0, 1]");
}

IntMatrix draw_entries(int g, double p, std::uint64_t seed) {
    if (g < 1) throw DomainError("bernoulli_matrix: g must be >= 1");
    check_probability(p);
    SplitMix64 rng(seed);
    IntMatrix m(g, g);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) m(i, j) = rng.next_double() < p ? 1 : 0;
    }
    return m;
}

} // namespace

BernoulliMatrix::BernoulliMatrix(int g, double p, std::uint64_t seed)
    : entries_(draw_entries(g, p, seed)), p_(p), seed_(seed) {}

BernoulliMatrix::BernoulliMatrix(IntMatrix entries, double p, std::uint64_t seed)
    : entries_(std::move(entries)), p_(p), seed_(seed) {}

BernoulliMatrix BernoulliMatrix::from_entries(const IntMatrix& entries, double p, std::uint64_t seed) {
    if (entries.rows() != entries.cols() || entries.rows() < 1) {
        throw ValidationError("BernoulliMatrix: entries must form a non-empty square matrix");
    }
    if ((entries.array() != 0 && entries.array() != 1).any()) {
        throw ValidationError("BernoulliMatrix: entries must be 0 or 1");
    }
    check_probability(p);
    return BernoulliMatrix(entries, p, seed);
}

BernoulliMatrix bernoulli_matrix(int g, double p, std::uint64_t seed) { return BernoulliMatrix(g, p, seed); }

bool is_nonsingular_exact(const BernoulliMatrix& m) { return is_full_rank_square(m.entries()); }

IndexSet::IndexSet(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    for (const auto& [i, j] : pairs_) {
        if (i < 1 || i > j) throw ValidationError("IndexSet: pairs must satisfy 1 <= i <= j");
    }
}

IndexSet first_three_rows_indices(int g) {
    if (g < 3) throw DomainError("first_three_rows_indices: requires g >= 3, got " + std::to_string(g));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= g; ++j) pairs.emplace_back(i, j);
    }
    return IndexSet(std::move(pairs));
}

int product_span_rank(const PlaneCurveModel& model, const BernoulliMatrix& m, const IndexSet& idx) {
    const int g = model.genus();
    if (m.g() != g) {
        throw ValidationError("product_span_rank: matrix size " + std::to_string(m.g()) + " != genus " +
                              std::to_string(g));
    }
    const auto& b = m.entries();
    const auto cols = static_cast<Eigen::Index>(model.quad_monomials().size());
    IntMatrix coeffs = IntMatrix::Zero(static_cast<Eigen::Index>(idx.size()), cols);
    Eigen::Index row = 0;
    for (const auto& [i, j] : idx.pairs()) {
        if (j > g) throw ValidationError("product_span_rank: index pair exceeds genus");
        for (int k = 0; k < g; ++k) {
            if (b(i - 1, k) == 0) continue;
            for (int l = 0; l < g; ++l) {
                if (b(j - 1, l) == 0) continue;
                const auto col = static_cast<Eigen::Index>(model.product_index(std::size_t(k), std::size_t(l)));
                coeffs(row, col) += b(i - 1, k) * b(j - 1, l);
            }
        }
        ++row;
    }
    return exact_rank(coeffs);
}

double SuccessStats::standard_error() const {
    if (trials == 0) return 0.0;
    return std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
}

SuccessStats make_stats(std::uint64_t trials, std::uint64_t successes, std::uint64_t nonsingular) {
    SuccessStats s;
    s.trials = trials;
    s.successes = successes;
    s.nonsingular_count = nonsingular;
    s.estimate = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    s.ci95_halfwidth = 1.96 * s.standard_error();
    return s;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index) { return mix(seed ^ trial_index); }

TrialRecord run_trial(const PlaneCurveModel& model, double p, std::uint64_t seed) {
    const int g = model.genus();
    const BernoulliMatrix m(g, p, seed);
    TrialRecord rec;
    rec.seed = seed;
    rec.matrix_nonsingular = is_nonsingular_exact(m);
    rec.span_rank = product_span_rank(model, m, first_three_rows_indices(g));
    rec.success = rec.span_rank == moduli_count(g);
    return rec;
}

TrialRecord run_indexed_trial(const PlaneCurveModel& model, double p, std::uint64_t seed, std::uint64_t index) {
    TrialRecord rec = run_trial(model, p, trial_seed(seed, index));
    rec.trial_index = index;
    return rec;
}

SuccessStats aggregate(const std::vector<TrialRecord>& records) {
    std::uint64_t succ = 0, nonsing = 0;
    for (const auto& r : records) {
        succ += r.success ? 1 : 0;
        nonsing += r.matrix_nonsingular ? 1 : 0;
    }
    return make_stats(records.size(), succ, nonsing);
}

MonteCarloResult monte_carlo_run(const PlaneCurveModel& model, double p, std::uint64_t n_trials, std::uint64_t seed) {
    if (n_trials < 1) throw DomainError("monte_carlo: need at least one trial");
    check_probability(p);
    MonteCarloResult out;
    out.records.reserve(n_trials);
    for (std::uint64_t i = 0; i < n_trials; ++i) out.records.push_back(run_indexed_trial(model, p, seed, i));
    out.stats = aggregate(out.records);
    return out;
}

SuccessStats monte_carlo(const PlaneCurveModel& model, double p, std::uint64_t n_trials, std::uint64_t seed) {
    return monte_carlo_run(model, p, n_trials, seed).stats;
}

SuccessStats exhaustive(const PlaneCurveModel& model) {
    const int g = model.genus();
    if (g > 3) {
        throw DomainError("exhaustive: genus " + std::to_string(g) + " would need 2^" + std::to_string(g * g) +
                          " matrices; only genus <= 3 (at most 512) is enumerated");
    }
    const std::uint64_t count = std::uint64_t{1} << (g * g);
    const IndexSet idx = first_three_rows_indices(g);
    const int target = moduli_count(g);
    std::uint64_t succ = 0, nonsing = 0;
    IntMatrix e(g, g);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) e(i, j) = static_cast<std::int64_t>((bits >> (i * g + j)) & 1U);
        }
        const auto m = BernoulliMatrix::from_entries(e);
        nonsing += is_nonsingular_exact(m) ? 1 : 0;
        succ += product_span_rank(model, m, idx) == target ? 1 : 0;
    }
    return make_stats(count, succ, nonsing);
}

SuccessStats singularity_rate(int g, double p, std::uint64_t n_trials, std::uint64_t seed) {
    if (g < 1) throw DomainError("singularity_rate: g must be >= 1");
    if (n_trials < 1) throw DomainError("singularity_rate: need at least one trial");
    check_probability(p);
    std::uint64_t singular = 0;
    for (std::uint64_t i = 0; i < n_trials; ++i) {
        singular += is_nonsingular_exact(BernoulliMatrix(g, p, trial_seed(seed, i))) ? 0 : 1;
    }
    return make_stats(n_trials, singular, n_trials - singular);
}

std::vector<LabeledValue> probability_bounds(int g) {
    const int n = moduli_count(g);
    const double sixteenth_pow = std::pow(16.0, -n);
    return {
        {"conjectured_nonsingular", 1.0 - std::pow(0.5, g), true,
         "1 - (1/2)^g: conjectured nonsingularity rate of g x g Bernoulli(1/2) matrices"},
        {"proved_nonsingular_bound", 1.0 - std::pow(0.75, g), true,
         "1 - (3/4)^g: proved form of the nonsingularity lower bound"},
        {"basis_expression", n * sixteenth_pow, false,
         "(3g-3)/16^(3g-3) read as the probability that the products form a basis"},
        {"union_bound_reading", 1.0 - n * sixteenth_pow, false,
         "1 - (3g-3)/16^(3g-3): the same expression read as a failure-probability bound"},
    };
}

} // namespace rslab
