#include "oracles/agm.hpp"
#include "rslab/curve_io.hpp"
#include "rslab/error.hpp"
#include "rslab/periods.hpp"
#include "rslab/rng.hpp"
#include "rslab/siegel.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace rslab;

namespace {

std::vector<cplx> roots_of_unity(int n) {
    std::vector<cplx> out;
    for (int k = 0; k < n; ++k) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
    return out;
}

PeriodMatrix omega(const HyperellipticCurve& c, int nodes = 256) {
    const PeriodData d = hyperelliptic_raw_periods(c, nodes);
    return normalize(d.table, d.homology);
}

} // namespace

TEST_CASE("table shape and homology invariants") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<cplx> pts;
        for (int k = 0; k < n; ++k) pts.emplace_back(k, 0.0);
        const HyperellipticCurve c(pts);
        const PeriodData d = hyperelliptic_raw_periods(c, 64);
        const int g = c.genus();
        CHECK(d.table.entries.rows() == 2 * g);
        CHECK(d.table.entries.cols() == g);
        CHECK(d.table.row_labels.size() == static_cast<std::size_t>(2 * g));
        CHECK(d.table.col_labels.size() == static_cast<std::size_t>(g));
        CHECK(d.table.est_error >= 0.0);
        CHECK(std::isfinite(d.table.est_error));
        CHECK(d.homology.cycles.size() == static_cast<std::size_t>(2 * g));
        CHECK(is_consistent(d.homology));
        for (const auto& cyc : d.homology.cycles) {
            for (const auto& step : cyc.steps) CHECK(std::abs(step.sheet) == 1);
        }
    }
}

TEST_CASE("elliptic raw periods match the lemniscate constant") {
    const PeriodData d = hyperelliptic_raw_periods(HyperellipticCurve({-1.0, 0.0, 1.0}), 256);
    const double w = oracle::lemniscate();
    for (Eigen::Index i = 0; i < 2; ++i) CHECK(std::abs(std::abs(d.table.entries(i, 0)) - 2.0 * w) < 1e-10);
    CHECK(std::abs(d.table.entries(0, 0).imag()) < 1e-14);
    CHECK(std::abs(d.table.entries(1, 0).real()) < 1e-14);
}

TEST_CASE("elliptic period ratio matches the AGM oracle") {
    const std::vector<std::array<double, 3>> cases{{-1, 0, 1}, {0, 1, 3}, {-2, 0.5, 7}, {0, 0.01, 1}, {0, 0.99, 1}};
    for (const auto& e : cases) {
        const PeriodMatrix m = omega(HyperellipticCurve({e[0], e[1], e[2]}));
        CHECK(std::abs(m.entries(0, 0) - oracle::legendre_tau(e[0], e[1], e[2])) < 1e-8);
    }
}

TEST_CASE("real-branch segment integrals are real or purely imaginary") {
    const PeriodData d = hyperelliptic_raw_periods(HyperellipticCurve({0.0, 1.0, 2.0, 3.0, 4.0}), 256);
    for (Eigen::Index i = 0; i < d.table.entries.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.table.entries.cols(); ++j) {
            const cplx z = d.table.entries(i, j);
            CHECK(std::min(std::abs(z.real()), std::abs(z.imag())) <= 1e-12 * std::abs(z));
        }
    }
}

TEST_CASE("Riemann relations hold for real and complex branch points") {
    std::vector<std::vector<cplx>> curves{roots_of_unity(5), roots_of_unity(6), roots_of_unity(7),
                                          {0.0, 1.0, 2.0, 3.0, 4.0}, {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0},
                                          {cplx(0, 1), cplx(0, -1), cplx(2, 0.5), cplx(-1.5, 0.2), cplx(0.3, 0)}};
    SplitMix64 rng(2024);
    for (int k = 0; k < 10; ++k) {
        std::vector<cplx> pts;
        const int n = 5 + k % 4;
        for (int i = 0; i < n; ++i) pts.emplace_back(4.0 * rng.next_double() - 2.0, 4.0 * rng.next_double() - 2.0);
        curves.push_back(pts);
    }
    for (const auto& pts : curves) {
        const PeriodMatrix m = omega(HyperellipticCurve(pts));
        const SiegelValidation v = validate_siegel(m, 1e-8);
        CHECK(v.symmetry_residual <= 1e-8);
        CHECK(v.min_im_eigenvalue > 0.0);
        CHECK(v.is_member);
    }
}

TEST_CASE("normalized matrix is invariant under real affine changes of x and the leading coefficient") {
    const std::vector<cplx> base{0.0, 0.7, 2.0, 3.1, 4.0, 5.5};
    const PeriodMatrix ref = omega(HyperellipticCurve(base));
    std::vector<cplx> moved;
    for (const auto& e : base) moved.push_back(2.5 * e - 1.25);
    CHECK((omega(HyperellipticCurve(moved)).entries - ref.entries).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((omega(HyperellipticCurve(base, cplx(3.0, -2.0))).entries - ref.entries).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("node doubling converges on the bundled curves") {
    for (const char* name : {"elliptic_x3_minus_x.json", "g2_x5_minus_1.json", "g2_real_quintic.json",
                             "g2_real_sextic.json", "g3_real_septic.json"}) {
        const auto curve = std::get<HyperellipticCurve>(load_curve(test_support::data(name)));
        CHECK(hyperelliptic_raw_periods(curve, 256).table.est_error <= 1e-10);
    }
}

TEST_CASE("adaptive quadrature doubles until the tolerance is met") {
    // Nearly coalescing branch points slow convergence at small N.
    const HyperellipticCurve c({0.0, 1.0, 1.001, 3.0, 4.0});
    const PeriodData coarse = hyperelliptic_raw_periods(c, 8);
    CHECK(coarse.table.est_error > 1e-10);
    const PeriodData fine = hyperelliptic_raw_periods_adaptive(c, {8, 1e-10, 8192});
    CHECK(fine.table.est_error <= 1e-10);
    CHECK(fine.table.quadrature_nodes > 8);
    const PeriodData capped = hyperelliptic_raw_periods_adaptive(c, {8, 1e-10, 16});
    CHECK(capped.table.quadrature_nodes == 16);
    CHECK(capped.table.est_error > 1e-10);
}

TEST_CASE("normalize with an identity A-block returns the B-block") {
    RawPeriodTable raw;
    raw.entries.resize(4, 2);
    Eigen::MatrixXcd b(2, 2);
    b << cplx(0.1, 1.0), cplx(0.2, 0.3), cplx(0.2, 0.3), cplx(-0.4, 2.0);
    raw.entries.topRows(2) = Eigen::MatrixXcd::Identity(2, 2);
    raw.entries.bottomRows(2) = b;
    HomologyBasis hom;
    hom.intersection_matrix = standard_symplectic_form(2);
    hom.symplectic_transform = IntMatrix::Identity(4, 4);
    const PeriodMatrix m = normalize(raw, hom);
    CHECK((m.entries - b).cwiseAbs().maxCoeff() == 0.0);
    CHECK(*m.provenance.condition == doctest::Approx(1.0));
}

TEST_CASE("ill-conditioned A-block is refused with the condition estimate") {
    RawPeriodTable raw;
    raw.entries = Eigen::MatrixXcd::Identity(4, 2);
    raw.entries(1, 1) = 1e-12;
    raw.entries(2, 0) = cplx(0, 1);
    raw.entries(3, 1) = cplx(0, 1);
    HomologyBasis hom;
    hom.intersection_matrix = standard_symplectic_form(2);
    hom.symplectic_transform = IntMatrix::Identity(4, 4);
    try {
        normalize(raw, hom);
        FAIL("expected NormalizationError");
    } catch (const NormalizationError& e) {
        CHECK(e.condition() > 1e10);
    }
}

TEST_CASE("node count below four is a domain error") {
    CHECK_THROWS_AS(hyperelliptic_raw_periods(HyperellipticCurve({0.0, 1.0, 2.0}), 3), DomainError);
}
