#include "rslab/error.hpp"
#include "rslab/periods.hpp"

#include <cmath>
#include <cstdio>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace rslab {

RawPeriodTable symplectic_periods(const RawPeriodTable& raw, const HomologyBasis& hom) {
    const IntMatrix& t = hom.symplectic_transform;
    if (t.cols() != raw.entries.rows()) {
        throw ValidationError("symplectic transform has " + std::to_string(t.cols()) + " columns but the table has " +
                              std::to_string(raw.entries.rows()) + " cycles");
    }
    const Eigen::Index g = t.rows() / 2;
    if (g != raw.entries.cols()) {
        throw ValidationError("symplectic basis of rank " + std::to_string(2 * g) + " does not match " +
                              std::to_string(raw.entries.cols()) + " differentials");
    }
    RawPeriodTable out;
    out.entries = t.cast<double>().cast<cplx>() * raw.entries;
    out.col_labels = raw.col_labels;
    for (Eigen::Index i = 0; i < g; ++i) out.row_labels.push_back("alpha" + std::to_string(i + 1));
    for (Eigen::Index i = 0; i < g; ++i) out.row_labels.push_back("beta" + std::to_string(i + 1));
    out.quadrature_nodes = raw.quadrature_nodes;
    // Integer combinations amplify the per-entry error by at most the row 1-norm.
    double amp = 0.0;
    for (Eigen::Index i = 0; i < t.rows(); ++i) amp = std::max(amp, double(t.row(i).cwiseAbs().sum()));
    out.est_error = raw.est_error * amp;
    return out;
}

PeriodMatrix normalize(const RawPeriodTable& raw, const HomologyBasis& hom, double max_condition) {
    const RawPeriodTable sym = symplectic_periods(raw, hom);
    const Eigen::Index g = sym.entries.cols();
    const Eigen::MatrixXcd a = sym.entries.topRows(g);
    const Eigen::MatrixXcd b = sym.entries.bottomRows(g);

    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    const double cond = sv(g - 1) > 0.0 ? sv(0) / sv(g - 1) : INFINITY;
    if (!std::isfinite(cond) || cond > max_condition) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "normalize: A-block is ill-conditioned (condition estimate %.3e > %.3e)", cond,
                      max_condition);
        throw NormalizationError(buf, cond);
    }
    PeriodMatrix out;
    out.entries = a.transpose().partialPivLu().solve(b.transpose()).transpose();
    out.provenance.nodes = raw.quadrature_nodes;
    out.provenance.est_error = sym.est_error;
    out.provenance.condition = cond;
    return out;
}

} // namespace rslab
