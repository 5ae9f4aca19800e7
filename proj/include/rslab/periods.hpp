#pragma once

#include "rslab/curves.hpp"
#include "rslab/homology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace rslab {

/// Integrals of the basis differentials (columns) over homology cycles (rows).
struct RawPeriodTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Eigen::MatrixXcd entries;
    int quadrature_nodes = 0;
    /// max |value(N) - value(2N)| over entries; 0 for closed forms.
    double est_error = 0.0;
};

struct PeriodData {
    RawPeriodTable table;
    HomologyBasis homology;
};

struct Provenance {
    std::string source;
    int nodes = 0;
    double est_error = 0.0;
    std::optional<std::uint64_t> seed;
    /// 2-norm condition number of the A-block used for normalization.
    std::optional<double> condition;
};

/// g x g candidate element of the Siegel upper half-space. Membership is
/// checked by validate_siegel, never assumed.
struct PeriodMatrix {
    Eigen::MatrixXcd entries;
    Provenance provenance;

    int g() const noexcept { return static_cast<int>(entries.rows()); }
};

struct QuadraturePolicy {
    int initial_nodes = 256;
    double tolerance = 1e-10;
    int max_nodes = 8192;
};

/**
 * Raw periods of y^2 = c prod (x - e_k) for the differentials x^{k-1} dx / y.
 *
 * Branch points are ordered lexicographically by (Re, Im), which makes the
 * polygonal chain e_0 -> e_1 -> ... -> e_{n-1} simple. Cycle gamma_j is the lift
 * of a thin clockwise loop around the segment [e_j, e_{j+1}]; its period is twice
 * the segment integral on the sheet selected by continuing sqrt(f) along the left
 * side of the chain. Adjacent loops meet once, giving the tridiagonal
 * intersection matrix gamma_j . gamma_{j+1} = +1; gamma_1..gamma_{2g} form a
 * basis of H_1.
 *
 * est_error compares the table at `nodes` and 2 * `nodes`; the table holds the
 * values at `nodes`. Throws UnsupportedError when the chain is not simple and
 * DomainError for nodes < 4.
 */
PeriodData hyperelliptic_raw_periods(const HyperellipticCurve& curve, int nodes);

/// Doubles the node count from policy.initial_nodes until est_error <=
/// policy.tolerance or max_nodes is reached. Non-convergence is reported
/// through est_error, not thrown.
PeriodData hyperelliptic_raw_periods_adaptive(const HyperellipticCurve& curve, const QuadraturePolicy& policy = {});

/// Periods over the symplectic basis: rows alpha_1..alpha_g, beta_1..beta_g.
RawPeriodTable symplectic_periods(const RawPeriodTable& raw, const HomologyBasis& hom);

/// Omega = B A^{-1} after the symplectic transform, realizing int_{alpha_i} omega_j = delta_ij.
/// Throws NormalizationError when cond(A) exceeds max_condition.
PeriodMatrix normalize(const RawPeriodTable& raw, const HomologyBasis& hom, double max_condition = 1e10);

/// Euler Beta function B(x, y) for x, y > 0.
double beta_function(double x, double y);

/// Period of x^{r-1} y^{s-d} dx over the translate A^a B^b kappa of the
/// fundamental cycle kappa = (1 - A)(1 - B) gamma_0 on x^d + y^d = 1, where
/// A(x, y) = (zeta x, y), B(x, y) = (x, zeta y), zeta = exp(2 pi i / d), and
/// gamma_0 is the real path x in [0, 1]:
///   zeta^{a r + b s} (1 - zeta^r)(1 - zeta^s) B(r/d, s/d) / d.
cplx fermat_translate_period(int d, DiffExponent diff, int a, int b);

struct FermatPeriods {
    int degree = 0;
    std::vector<DiffExponent> differentials;
    /// (a, b) translate exponents, one per row.
    std::vector<std::pair<int, int>> cycles;
    /// 2g x g.
    Eigen::MatrixXcd entries;
};

/// Raw Fermat periods over 2g translates chosen greedily (row-major in (a, b)):
/// a translate is kept when its real period vector raises the rank at
/// tolerance 1e-9. Requires 4 <= d <= 15.
FermatPeriods fermat_raw_periods(int d);

/**
 * Periods over all d^2 translates with their intersection form and a
 * symplectic basis.
 *
 * The arcs A^a B^b gamma_0 form the complete bipartite graph between
 * P_b = (0, zeta^b) and Q_a = (zeta^a, 0), embedded with the cyclic edge order
 * given by the local coordinates x at P_b and y at Q_a. Intersection numbers of
 * the translates are counted as chord crossings at shared vertices after a
 * parallel push-off of the second cycle. The translates generate H_1, so the
 * form reduces to a symplectic basis.
 */
PeriodData fermat_period_data(int d);

} // namespace rslab
