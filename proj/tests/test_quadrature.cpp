#include "oracles/agm.hpp"
#include "rslab/error.hpp"
#include "rslab/quadrature.hpp"

#include <doctest.h>

#include <numbers>

using namespace rslab;

TEST_CASE("arcsine integral over [-1, 1]") {
    const std::vector<cplx> roots{-1.0, 1.0};
    const cplx v = chebyshev_segment_integral(roots, -1.0, 1, -1.0, 1.0, 32);
    CHECK(std::abs(v - std::numbers::pi) < 1e-12);
    const cplx odd = chebyshev_segment_integral(roots, -1.0, 2, -1.0, 1.0, 32);
    CHECK(std::abs(odd) < 1e-14);
}

TEST_CASE("x^3 - x over [0, 1] against the AGM lemniscate constant") {
    const std::vector<cplx> roots{-1.0, 0.0, 1.0};
    const cplx v = chebyshev_segment_integral(roots, 1.0, 1, 0.0, 1.0, 256);
    CHECK(std::abs(v.real()) < 1e-14);
    CHECK(std::abs(std::abs(v) - oracle::lemniscate()) < 1e-10);
}

TEST_CASE("complete elliptic integral through a Legendre-form segment") {
    // int_0^1 dx / sqrt((1 - x^2)(1 - k^2 x^2)) = K(k); roots +-1, +-1/k.
    const double k = 0.6;
    const std::vector<cplx> roots{-1.0 / k, -1.0, 1.0, 1.0 / k};
    const cplx full = chebyshev_segment_integral(roots, k * k, 1, -1.0, 1.0, 256);
    CHECK(std::abs(std::abs(full) - 2.0 * oracle::elliptic_k(k)) < 1e-11);
}

TEST_CASE("moments agree with single integrals") {
    const std::vector<cplx> roots{0.0, 1.0, 2.0, 3.0, 4.0};
    const auto m = chebyshev_segment_moments(roots, 1.0, 2, 1.0, 2.0, 128);
    REQUIRE(m.size() == 2);
    CHECK(std::abs(m[0] - chebyshev_segment_integral(roots, 1.0, 1, 1.0, 2.0, 128)) < 1e-15);
    CHECK(std::abs(m[1] - chebyshev_segment_integral(roots, 1.0, 2, 1.0, 2.0, 128)) < 1e-14);
}

TEST_CASE("precondition failures") {
    const std::vector<cplx> roots{0.0, 1.0, 2.0};
    CHECK_THROWS_AS(chebyshev_segment_integral(roots, 1.0, 1, 0.0, 0.0, 32), DomainError);
    CHECK_THROWS_AS(chebyshev_segment_integral(roots, 1.0, 1, 0.0, 0.5, 32), DomainError);
    CHECK_THROWS_AS(chebyshev_segment_integral(roots, 1.0, 1, 0.0, 1.0, 3), DomainError);
    CHECK_THROWS_AS(chebyshev_segment_integral(roots, 1.0, 1, 0.0, 2.0, 32), SingularIntegrandError);
}
