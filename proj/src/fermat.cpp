#include "rslab/error.hpp"
#include "rslab/periods.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace rslab {

double beta_function(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("beta_function: arguments must be positive and finite");
    }
    if (x + y < 100.0) return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

namespace {

void check_degree(int d) {
    if (d < 4 || d > 15) throw DomainError("fermat periods: degree must lie in [4, 15], got " + std::to_string(d));
}

cplx root_of_unity(int d, long k) {
    const long m = ((k % d) + d) % d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / d);
}

std::string diff_label(int d, DiffExponent e) {
    return "x^" + std::to_string(e.r - 1) + " y^" + std::to_string(e.s - d) + " dx";
}

// One traversal of the arc e(a, b): x = zeta^a t, y = zeta^b (1 - t^d)^{1/d},
// running from P_b = (0, zeta^b) to Q_a = (zeta^a, 0) when forward.
struct ArcStep {
    int a;
    int b;
    bool forward;
};

// Closed walk of A^a B^b kappa: P_b -> Q_a -> P_{b+1} -> Q_{a+1} -> P_b.
std::array<ArcStep, 4> translate_walk(int d, int a, int b) {
    const int a1 = (a + 1) % d, b1 = (b + 1) % d;
    return {{{a, b, true}, {a, b1, false}, {a1, b1, true}, {a1, b, false}}};
}

struct Passage {
    bool at_p;  // vertex P_b (else Q_a)
    int vertex; // b for P, a for Q
    int in_pos;
    int out_pos;
};

// Angular position (in units of 2 pi / d) of an arc at its endpoint: arcs at
// P_b leave along arg x = 2 pi a / d, arcs at Q_a leave along arg y = 2 pi b / d.
std::array<Passage, 4> passages(int d, int a, int b) {
    const auto walk = translate_walk(d, a, b);
    std::array<Passage, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        const ArcStep& in = walk[i];
        const ArcStep& next = walk[(i + 1) % 4];
        const bool at_p = !in.forward; // a backward traversal ends at P
        out[i].at_p = at_p;
        out[i].vertex = at_p ? in.b : in.a;
        out[i].in_pos = at_p ? in.a : in.b;
        out[i].out_pos = at_p ? next.a : next.b;
    }
    return out;
}

// x strictly inside the counterclockwise arc from `from` to `to`, modulo m.
bool in_ccw_arc(int x, int from, int to, int m) {
    const int dx = ((x - from) % m + m) % m;
    const int dt = ((to - from) % m + m) % m;
    return dx > 0 && dx < dt;
}

// Intersection number of two translates. The second cycle is pushed off to the
// left of each arc's P -> Q direction, which at P is the counterclockwise side
// and at Q the clockwise side; crossings then happen only inside vertex disks,
// where each passage is a chord between its in- and out-positions.
int translate_intersection(int d, int a1, int b1, int a2, int b2) {
    const int m = 4 * d;
    const auto p1 = passages(d, a1, b1);
    const auto p2 = passages(d, a2, b2);
    int total = 0;
    for (const auto& u : p1) {
        for (const auto& v : p2) {
            if (u.at_p != v.at_p || u.vertex != v.vertex) continue;
            const int shift = u.at_p ? 1 : -1;
            const int from = 4 * u.in_pos, to = 4 * u.out_pos;
            const bool in_inside = in_ccw_arc(4 * v.in_pos + shift, from, to, m);
            const bool out_inside = in_ccw_arc(4 * v.out_pos + shift, from, to, m);
            if (in_inside && !out_inside) total += 1;
            if (out_inside && !in_inside) total -= 1;
        }
    }
    return total;
}

} // namespace

cplx fermat_translate_period(int d, DiffExponent diff, int a, int b) {
    if (d < 4) throw DomainError("fermat periods: degree must be >= 4");
    if (diff.r < 1 || diff.s < 1 || diff.r + diff.s > d - 1) {
        throw DomainError("fermat periods: differential exponents need r, s >= 1 and r + s <= d - 1");
    }
    const cplx zr = root_of_unity(d, diff.r), zs = root_of_unity(d, diff.s);
    const double magnitude = beta_function(double(diff.r) / d, double(diff.s) / d) / d;
    return root_of_unity(d, long(a) * diff.r + long(b) * diff.s) * (1.0 - zr) * (1.0 - zs) * magnitude;
}

FermatPeriods fermat_raw_periods(int d) {
    check_degree(d);
    const FermatCurve curve(d);
    const int g = curve.genus();
    const auto& diffs = curve.diff_exponents();

    FermatPeriods out;
    out.degree = d;
    out.differentials = diffs;
    out.entries.resize(2 * g, g);

    // Orthonormal basis of the accepted real period vectors (Re, Im interleaved).
    std::vector<Eigen::VectorXd> basis;
    for (int a = 0; a < d && static_cast<int>(out.cycles.size()) < 2 * g; ++a) {
        for (int b = 0; b < d && static_cast<int>(out.cycles.size()) < 2 * g; ++b) {
            Eigen::VectorXcd row(g);
            for (int k = 0; k < g; ++k) row(k) = fermat_translate_period(d, diffs[static_cast<std::size_t>(k)], a, b);
            Eigen::VectorXd v(2 * g);
            v << row.real(), row.imag();
            const double norm0 = v.norm();
            Eigen::VectorXd w = v;
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& q : basis) w -= q.dot(w) * q;
            }
            if (w.norm() > 1e-9 * norm0) {
                basis.push_back(w / w.norm());
                out.entries.row(static_cast<Eigen::Index>(out.cycles.size())) = row.transpose();
                out.cycles.emplace_back(a, b);
            }
        }
    }
    if (static_cast<int>(out.cycles.size()) != 2 * g) {
        throw NumericError("fermat periods: translates span rank " + std::to_string(out.cycles.size()) +
                           " < 2g = " + std::to_string(2 * g));
    }
    return out;
}

PeriodData fermat_period_data(int d) {
    check_degree(d);
    const FermatCurve curve(d);
    const int g = curve.genus();
    const auto& diffs = curve.diff_exponents();
    const int n = d * d;

    PeriodData out;
    RawPeriodTable& table = out.table;
    table.entries.resize(n, g);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const int row = a * d + b;
            for (int k = 0; k < g; ++k) {
                table.entries(row, k) = fermat_translate_period(d, diffs[static_cast<std::size_t>(k)], a, b);
            }
            table.row_labels.push_back("kappa(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    for (const auto& e : diffs) table.col_labels.push_back(diff_label(d, e));

    HomologyBasis& hom = out.homology;
    hom.intersection_matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        hom.cycles.push_back({table.row_labels[static_cast<std::size_t>(i)], {}});
        for (int j = 0; j < n; ++j) {
            hom.intersection_matrix(i, j) = translate_intersection(d, i / d, i % d, j / d, j % d);
        }
    }
    hom.symplectic_transform = symplectic_reduce(hom.intersection_matrix);
    if (hom.symplectic_transform.rows() != 2 * g) {
        throw NumericError("fermat homology: intersection form has rank " +
                           std::to_string(hom.symplectic_transform.rows()) + ", expected " + std::to_string(2 * g));
    }
    return out;
}

} // namespace rslab
