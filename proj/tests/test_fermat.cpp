#include "oracles/fermat_paths.hpp"
#include "rslab/error.hpp"
#include "rslab/periods.hpp"
#include "rslab/siegel.hpp"

#include <doctest.h>

#include <numbers>

#include <Eigen/LU>

using namespace rslab;

TEST_CASE("beta function values") {
    CHECK(beta_function(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_function(1.0 / 3.0, 2.0 / 3.0) == doctest::Approx(2.0 * std::numbers::pi / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(beta_function(60.0, 70.0) == doctest::Approx(std::exp(std::lgamma(60.0) + std::lgamma(70.0) - std::lgamma(130.0))).epsilon(1e-12));
    CHECK_THROWS_AS(beta_function(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(beta_function(1.0, -2.0), DomainError);
}

TEST_CASE("beta magnitude is symmetric in r and s and positive") {
    const FermatCurve curve(11);
    for (const auto& e : curve.diff_exponents()) {
        CHECK(beta_function(e.r / 11.0, e.s / 11.0) > 0.0);
        CHECK(beta_function(e.r / 11.0, e.s / 11.0) == doctest::Approx(beta_function(e.s / 11.0, e.r / 11.0)).epsilon(1e-14));
    }
}

TEST_CASE("closed form matches direct path integration for d = 4 and 5") {
    for (int d : {4, 5}) {
        const FermatCurve curve(d);
        for (const auto& e : curve.diff_exponents()) {
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    const cplx closed = fermat_translate_period(d, e, a, b);
                    const cplx path = oracle::fermat_cycle(d, e.r, e.s, a, b);
                    CHECK(std::abs(closed - path) <= 1e-8 * std::abs(path));
                }
            }
        }
    }
}

TEST_CASE("greedy translate selection spans 2g real dimensions") {
    for (int d : {4, 5, 7, 11}) {
        const FermatPeriods p = fermat_raw_periods(d);
        const int g = FermatCurve(d).genus();
        CHECK(p.entries.rows() == 2 * g);
        CHECK(p.entries.cols() == g);
        CHECK(p.cycles.size() == static_cast<std::size_t>(2 * g));
        Eigen::MatrixXd real(2 * g, 2 * g);
        real << p.entries.real(), p.entries.imag();
        CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(real).rank() == 2 * g);
    }
    CHECK_THROWS_AS(fermat_raw_periods(3), DomainError);
    CHECK_THROWS_AS(fermat_raw_periods(16), DomainError);
}

TEST_CASE("translate intersection form reduces to a symplectic basis") {
    for (int d : {4, 5, 6, 11}) {
        const PeriodData data = fermat_period_data(d);
        const int g = FermatCurve(d).genus();
        const IntMatrix& x = data.homology.intersection_matrix;
        CHECK(x.rows() == d * d);
        CHECK(x == -x.transpose());
        CHECK(data.homology.symplectic_transform.rows() == 2 * g);
        CHECK(is_consistent(data.homology));
    }
}

TEST_CASE("fermat period matrices satisfy the Riemann relations") {
    for (int d = 4; d <= 11; ++d) {
        const PeriodData data = fermat_period_data(d);
        const SiegelValidation v = validate_siegel(normalize(data.table, data.homology), 1e-8);
        CHECK(v.is_member);
    }
}

TEST_CASE("translate energy is symmetric under exchanging r and s") {
    const int d = 4;
    const FermatCurve curve(d);
    for (const auto& e : curve.diff_exponents()) {
        double lhs = 0.0, rhs = 0.0;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                lhs += std::norm(fermat_translate_period(d, e, a, b));
                rhs += std::norm(fermat_translate_period(d, {e.s, e.r}, a, b));
            }
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}
