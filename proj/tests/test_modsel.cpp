#include "oracles/determinant.hpp"
#include "rslab/error.hpp"
#include "rslab/exact.hpp"
#include "rslab/modsel.hpp"
#include "rslab/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace rslab;

TEST_CASE("generator reproduces the published SplitMix64 sequence") {
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("bernoulli matrix degenerate parameters and determinism") {
    CHECK(bernoulli_matrix(4, 0.0, 1).entries() == IntMatrix::Zero(4, 4));
    CHECK(bernoulli_matrix(4, 1.0, 1).entries() == IntMatrix::Ones(4, 4));
    CHECK(bernoulli_matrix(6, 0.5, 9).entries() == bernoulli_matrix(6, 0.5, 9).entries());
    CHECK_THROWS_AS(bernoulli_matrix(3, 1.5, 0), DomainError);
    CHECK_THROWS_AS(bernoulli_matrix(0, 0.5, 0), DomainError);
}

TEST_CASE("entry (i, j) comes from draw i * g + j") {
    const int g = 5;
    const double p = 0.3;
    SplitMix64 rng(77);
    std::vector<double> draws;
    for (int k = 0; k < g * g; ++k) draws.push_back(rng.next_double());
    const BernoulliMatrix m(g, p, 77);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) CHECK(m.entries()(i, j) == (draws[i * g + j] < p ? 1 : 0));
}

TEST_CASE("exact nonsingularity examples") {
    CHECK(is_nonsingular_exact(BernoulliMatrix::from_entries(IntMatrix::Identity(3, 3))));
    CHECK_FALSE(is_nonsingular_exact(BernoulliMatrix::from_entries(IntMatrix::Ones(3, 3))));
    IntMatrix cyc(3, 3);
    cyc << 1, 1, 0, 0, 1, 1, 1, 0, 1;
    CHECK(is_nonsingular_exact(BernoulliMatrix::from_entries(cyc)));
    IntMatrix bad(2, 2);
    bad << 0, 2, 1, 0;
    CHECK_THROWS_AS(BernoulliMatrix::from_entries(bad), ValidationError);
}

TEST_CASE("first three rows index set") {
    const IndexSet three = first_three_rows_indices(3);
    CHECK(three.pairs() == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
    for (int g = 3; g <= 20; ++g) {
        const IndexSet s = first_three_rows_indices(g);
        CHECK(static_cast<int>(s.size()) == 3 * g - 3);
        for (const auto& [i, j] : s.pairs()) {
            CHECK(i <= 3);
            CHECK(i <= j);
        }
    }
    CHECK_THROWS_AS(first_three_rows_indices(2), DomainError);
    CHECK_THROWS_AS(IndexSet({{2, 1}}), ValidationError);
}

TEST_CASE("span rank examples") {
    const PlaneCurveModel quintic(5), quartic(4);
    const IndexSet idx6 = first_three_rows_indices(6);
    const int identity_rank = product_span_rank(quintic, BernoulliMatrix::from_entries(IntMatrix::Identity(6, 6)), idx6);
    CHECK(identity_rank <= 14);
    CHECK(product_span_rank(quartic, BernoulliMatrix::from_entries(IntMatrix::Identity(3, 3)), first_three_rows_indices(3)) == 6);
    CHECK(product_span_rank(quintic, BernoulliMatrix::from_entries(IntMatrix::Zero(6, 6)), idx6) == 0);
    CHECK(product_span_rank(quintic, BernoulliMatrix::from_entries(IntMatrix::Ones(6, 6)), idx6) == 1);
    CHECK_THROWS_AS(product_span_rank(quintic, BernoulliMatrix::from_entries(IntMatrix::Identity(3, 3)), idx6), ValidationError);
}

TEST_CASE("degenerate trials fail") {
    CHECK_FALSE(run_trial(PlaneCurveModel(5), 0.0, 3).success);
    const TrialRecord all_ones = run_trial(PlaneCurveModel(5), 1.0, 3);
    CHECK_FALSE(all_ones.success);
    CHECK(all_ones.span_rank == 1);
    CHECK(monte_carlo(PlaneCurveModel(4), 0.0, 50, 1).estimate == 0.0);
}

TEST_CASE("exhaustive quartic enumeration: success iff nonsingular, counted by Leibniz") {
    const PlaneCurveModel quartic(4);
    const IndexSet idx = first_three_rows_indices(3);
    int oracle_nonsingular = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
        const auto rows = oracle::bits_to_matrix3(bits);
        IntMatrix e(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e(i, j) = rows[i][j];
        const bool nonsingular = oracle::leibniz_det(rows) != 0;
        oracle_nonsingular += nonsingular;
        const auto m = BernoulliMatrix::from_entries(e);
        CHECK(is_nonsingular_exact(m) == nonsingular);
        CHECK((product_span_rank(quartic, m, idx) == 6) == nonsingular);
    }
    CHECK(oracle_nonsingular == 174);
    const SuccessStats s = exhaustive(quartic);
    CHECK(s.trials == 512);
    CHECK(s.nonsingular_count == 174);
    CHECK(s.successes == 174);
    CHECK_THROWS_AS(exhaustive(PlaneCurveModel(5)), DomainError);
}

TEST_CASE("span rank is bounded by the symmetric square of rank M") {
    const PlaneCurveModel quintic(5);
    const IndexSet idx = first_three_rows_indices(6);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const double p = 0.1 + 0.8 * static_cast<double>(seed % 9) / 8.0;
        const BernoulliMatrix m(6, p, seed);
        const int k = exact_rank(m.entries());
        const int r = product_span_rank(quintic, m, idx);
        CHECK(r <= 15);
        CHECK(r <= k * (k + 1) / 2);
        const TrialRecord rec = run_trial(quintic, p, seed);
        if (rec.success) CHECK(rec.span_rank == 15);
    }
}

TEST_CASE("span test is invariant under relabeling the differential basis") {
    // Permuting the zeta basis together with M's columns leaves every omega_i unchanged.
    const PlaneCurveModel quintic(5);
    const IndexSet idx = first_three_rows_indices(6);
    SplitMix64 rng(5);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const BernoulliMatrix m(6, 0.5, seed);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng.next() % (i + 1)]);
        IntMatrix permuted(6, 6);
        for (int j = 0; j < 6; ++j) permuted.col(perm[j]) = m.entries().col(j);
        // omega_i = sum_j M_ij zeta_j = sum_j permuted_{i, perm j} zeta_j: relabel zeta by perm^{-1}.
        IntMatrix coeffs = IntMatrix::Zero(15, 15);
        int row = 0;
        for (const auto& [a, b] : idx.pairs()) {
            for (int k = 0; k < 6; ++k)
                for (int l = 0; l < 6; ++l) {
                    const int zk = std::find(perm.begin(), perm.end(), k) - perm.begin();
                    const int zl = std::find(perm.begin(), perm.end(), l) - perm.begin();
                    coeffs(row, static_cast<Eigen::Index>(quintic.product_index(zk, zl))) += permuted(a - 1, k) * permuted(b - 1, l);
                }
            ++row;
        }
        CHECK(exact_rank(coeffs) == product_span_rank(quintic, m, idx));
    }
}

TEST_CASE("monte carlo is deterministic and order independent") {
    const PlaneCurveModel quartic(4);
    const MonteCarloResult run = monte_carlo_run(quartic, 0.5, 500, 17);
    CHECK(monte_carlo(quartic, 0.5, 500, 17).successes == run.stats.successes);
    std::vector<TrialRecord> shuffled = run.records;
    std::reverse(shuffled.begin(), shuffled.end());
    std::rotate(shuffled.begin(), shuffled.begin() + 123, shuffled.end());
    const SuccessStats again = aggregate(shuffled);
    CHECK(again.successes == run.stats.successes);
    CHECK(again.nonsingular_count == run.stats.nonsingular_count);
    for (std::uint64_t i = 0; i < run.records.size(); ++i) {
        CHECK(run.records[i].trial_index == i);
        CHECK(run.records[i].seed == trial_seed(17, i));
    }
    CHECK(run_indexed_trial(quartic, 0.5, 17, 42).span_rank == run.records[42].span_rank);
    CHECK_THROWS_AS(monte_carlo(quartic, 0.5, 0, 1), DomainError);
}

TEST_CASE("quartic monte carlo agrees with the exhaustive ratio") {
    const SuccessStats s = monte_carlo(PlaneCurveModel(4), 0.5, 20000, 3);
    CHECK(std::abs(s.estimate - 174.0 / 512.0) <= 3.0 * s.standard_error());
    CHECK(s.successes == s.nonsingular_count);
}

TEST_CASE("singularity rates") {
    const SuccessStats one = singularity_rate(1, 0.5, 20000, 8);
    CHECK(std::abs(one.estimate - 0.5) <= 3.0 * one.standard_error());
    const SuccessStats three = singularity_rate(3, 0.5, 20000, 8);
    CHECK(std::abs(three.estimate - 338.0 / 512.0) <= 3.0 * three.standard_error());
    CHECK(three.successes + three.nonsingular_count == three.trials);
    CHECK(singularity_rate(4, 0.0, 10, 1).estimate == 1.0);
}

TEST_CASE("probability expressions") {
    const auto g6 = probability_bounds(6);
    REQUIRE(g6.size() == 4);
    CHECK(g6[0].value == 0.984375);
    CHECK(g6[2].value == doctest::Approx(15.0 / std::pow(16.0, 15)).epsilon(1e-14));
    CHECK(g6[2].value == doctest::Approx(1.3e-17).epsilon(0.01));
    CHECK(g6[3].value == doctest::Approx(1.0 - 15.0 / std::pow(16.0, 15)));
    CHECK(probability_bounds(3)[1].value == doctest::Approx(1.0 - 27.0 / 64.0));
    CHECK_THROWS_AS(probability_bounds(1), DomainError);
}
