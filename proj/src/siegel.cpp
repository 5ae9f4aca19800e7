#include "rslab/siegel.hpp"

#include "rslab/error.hpp"
#include "rslab/rng.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace rslab {

SiegelValidation validate_siegel(const PeriodMatrix& m, double tol) {
    if (!(tol > 0.0)) throw DomainError("validate_siegel: tolerance must be positive");
    const Eigen::MatrixXcd& e = m.entries;
    if (e.rows() != e.cols() || e.rows() == 0) throw ValidationError("validate_siegel: matrix must be square and non-empty");
    if (!e.allFinite()) throw ValidationError("validate_siegel: matrix has non-finite entries");

    SiegelValidation out;
    out.tolerance = tol;
    out.symmetry_residual = (e - e.transpose()).cwiseAbs().maxCoeff();
    const Eigen::MatrixXd im = e.imag();
    const Eigen::MatrixXd sym = 0.5 * (im + im.transpose());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
    out.min_im_eigenvalue = eig.eigenvalues().minCoeff();
    out.is_member = out.symmetry_residual <= tol && out.min_im_eigenvalue > 0.0;
    return out;
}

PeriodMatrix random_siegel(int g, std::uint64_t seed, double scale) {
    if (g < 1) throw DomainError("random_siegel: g must be >= 1");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("random_siegel: scale must be positive");
    constexpr double floor = 1e-6;
    SplitMix64 rng(seed);
    auto draw = [&] { return (2.0 * rng.next_double() - 1.0) * scale; };

    Eigen::MatrixXd s(g, g), l(g, g);
    for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) s(i, j) = s(j, i) = draw();
    }
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) l(i, j) = draw();
    }
    Eigen::MatrixXd im(g, g);
    for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) {
            double acc = 0.0;
            for (int k = 0; k < g; ++k) acc += l(i, k) * l(j, k);
            im(i, j) = im(j, i) = acc + (i == j ? floor : 0.0);
        }
    }
    PeriodMatrix out;
    out.entries.resize(g, g);
    out.entries.real() = s;
    out.entries.imag() = im;
    out.provenance.source = "random_siegel";
    out.provenance.seed = seed;
    return out;
}

} // namespace rslab
