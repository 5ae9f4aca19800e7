#pragma once

/**
 * Moduli selection by random Bernoulli change of basis.
 *
 * A g x g matrix M with independent Bernoulli(p) entries turns the fixed
 * differential basis zeta_1..zeta_g into omega_i = sum_j M_ij zeta_j. The period
 * entries (i, j), i <= j, in the first three rows are local moduli when the
 * products omega_i omega_j for those pairs form a basis of the quadratic
 * differentials H^0(2K). For smooth plane curves of degree 4 and 5 that space is
 * the space of degree-2(d-3) forms, so the test reduces to the exact integer rank
 * of the (3g-3) x (3g-3) coefficient matrix of the products.
 */

#include "rslab/curves.hpp"
#include "rslab/homology.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rslab {

class BernoulliMatrix {
  public:
    /// Entry (i, j) = 1 iff draw number i*g + j of SplitMix64(seed) is < p.
    BernoulliMatrix(int g, double p, std::uint64_t seed);

    /// Explicit 0/1 entries (exhaustive enumeration, tests). p and seed are recorded as given.
    static BernoulliMatrix from_entries(const IntMatrix& entries, double p = 0.5, std::uint64_t seed = 0);

    int g() const noexcept { return static_cast<int>(entries_.rows()); }
    double p() const noexcept { return p_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const IntMatrix& entries() const noexcept { return entries_; }

  private:
    BernoulliMatrix(IntMatrix entries, double p, std::uint64_t seed);

    IntMatrix entries_;
    double p_;
    std::uint64_t seed_;
};

BernoulliMatrix bernoulli_matrix(int g, double p, std::uint64_t seed);

bool is_nonsingular_exact(const BernoulliMatrix& m);

/// Ordered (i, j) pairs, i <= j, 1-based.
class IndexSet {
  public:
    explicit IndexSet(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

  private:
    std::vector<std::pair<int, int>> pairs_;
};

/// (1, 1..g), (2, 2..g), (3, 3..g): the 3g - 3 upper-triangle positions of the
/// first three period matrix rows. Throws DomainError for g < 3.
IndexSet first_three_rows_indices(int g);

/// Exact rank of the coefficient matrix of {omega_a omega_b : (a, b) in idx}
/// over the model's quad_monomials. Throws ValidationError on dimension mismatch.
int product_span_rank(const PlaneCurveModel& model, const BernoulliMatrix& m, const IndexSet& idx);

struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::uint64_t seed = 0;
    bool matrix_nonsingular = false;
    int span_rank = 0;
    bool success = false; ///< span_rank == 3g - 3
};

struct SuccessStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t nonsingular_count = 0;
    double estimate = 0.0;
    /// 1.96 * sqrt(estimate (1 - estimate) / trials).
    double ci95_halfwidth = 0.0;

    double standard_error() const;
};

/// Per-trial seed: mix(seed ^ trial_index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index);

TrialRecord run_trial(const PlaneCurveModel& model, double p, std::uint64_t seed);

/// Trial `index` of a Monte Carlo run: run_trial with trial_seed(seed, index).
TrialRecord run_indexed_trial(const PlaneCurveModel& model, double p, std::uint64_t seed, std::uint64_t index);

/// Commutative aggregation of trial outcomes.
SuccessStats aggregate(const std::vector<TrialRecord>& records);
SuccessStats make_stats(std::uint64_t trials, std::uint64_t successes, std::uint64_t nonsingular);

struct MonteCarloResult {
    SuccessStats stats;
    std::vector<TrialRecord> records; ///< ordered by trial_index
};

MonteCarloResult monte_carlo_run(const PlaneCurveModel& model, double p, std::uint64_t n_trials, std::uint64_t seed);
SuccessStats monte_carlo(const PlaneCurveModel& model, double p, std::uint64_t n_trials, std::uint64_t seed);

/// Every 0/1 matrix of size genus; bit (i*g + j) of the enumeration index is
/// entry (i, j). Refuses genus > 3 with the matrix count in the message.
SuccessStats exhaustive(const PlaneCurveModel& model);

/// Pr[M singular] for g x g Bernoulli(p) matrices. `successes` counts singular
/// draws, `nonsingular_count` the rest; draw i uses trial_seed(seed, i).
SuccessStats singularity_rate(int g, double p, std::uint64_t n_trials, std::uint64_t seed);

struct LabeledValue {
    std::string label;
    double value;
    bool heuristic; ///< o(1) terms dropped
    std::string description;
};

/// (a) 1 - (1/2)^g, (b) 1 - (3/4)^g, (c) (3g-3)/16^(3g-3), (d) 1 - (3g-3)(1/16)^(3g-3).
std::vector<LabeledValue> probability_bounds(int g);

} // namespace rslab
