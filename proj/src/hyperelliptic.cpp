#include "rslab/error.hpp"
#include "rslab/periods.hpp"
#include "rslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

namespace rslab {

namespace {

constexpr cplx I{0.0, 1.0};

double distance_to_segment(cplx p, cplx a, cplx b) {
    const cplx d = b - a;
    double t = std::real((p - a) * std::conj(d)) / std::norm(d);
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

double cross(cplx u, cplx v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
    const double d1 = cross(q2 - q1, p1 - q1);
    const double d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1);
    const double d4 = cross(p2 - p1, q2 - p1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

class SqrtTracker {
  public:
    SqrtTracker(const std::vector<cplx>& roots, cplx leading, cplx start, cplx value)
        : roots_(roots), leading_(leading), pos_(start), value_(value) {}

    // Steps shrink with the distance to the nearest root, so sqrt(f) turns by a
    // bounded angle per step however close the path passes to a branch point.
    void line_to(cplx target) {
        const cplx from = pos_;
        const double length = std::abs(target - from);
        double t = 0.0;
        while (t < length) {
            t = std::min(length, t + kStep * nearest_root(pos_));
            advance(from + (target - from) * (t / length));
        }
    }

    // Clockwise arc around `center` from the current point through an angle `sweep` > 0.
    void arc_clockwise(cplx center, double sweep) {
        const cplx rel = pos_ - center;
        const double r = std::abs(rel), start = std::arg(rel);
        double swept = 0.0;
        while (swept < sweep) {
            swept = std::min(sweep, swept + kStep * nearest_root(pos_) / r);
            advance(center + std::polar(r, start - swept));
        }
    }

    cplx position() const { return pos_; }
    cplx value() const { return value_; }

  private:
    static constexpr double kStep = 0.05;

    double nearest_root(cplx z) const {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& e : roots_) d = std::min(d, std::abs(z - e));
        return d;
    }

    void advance(cplx z) {
        cplx f = leading_;
        for (const auto& e : roots_) f *= (z - e);
        const cplx s = std::sqrt(f);
        value_ = (std::real(s * std::conj(value_)) >= 0.0) ? s : -s;
        pos_ = z;
    }

    const std::vector<cplx>& roots_;
    cplx leading_;
    cplx pos_;
    cplx value_;
};

// Sign relating the reference branch on the next segment to the continuation of
// the current segment's branch along the left side of the chain.
int continuation_sign(const std::vector<cplx>& roots, cplx leading, const std::vector<cplx>& chain, std::size_t j,
                      cplx branch_here, cplx branch_next) {
    const cplx e0 = chain[j], e1 = chain[j + 1], e2 = chain[j + 2];
    const cplx u0 = (e1 - e0) / std::abs(e1 - e0);
    const cplx u1 = (e2 - e1) / std::abs(e2 - e1);

    double rho = 0.5 * std::min(std::abs(e1 - e0), std::abs(e2 - e1));
    for (const auto& e : chain) {
        if (e != e1) rho = std::min(rho, 0.25 * std::abs(e - e1));
    }
    double clearance = rho;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k != j && k != j + 1) clearance = std::min(clearance, distance_to_segment(chain[k], e0, e1));
        if (k != j + 1 && k != j + 2) clearance = std::min(clearance, distance_to_segment(chain[k], e1, e2));
    }
    const double theta_back = std::arg(e0 - e1);
    const double theta_fwd = std::arg(e2 - e1);
    double left_sector = std::fmod(theta_back - theta_fwd, 2.0 * std::numbers::pi);
    if (left_sector <= 0.0) left_sector += 2.0 * std::numbers::pi;
    const double delta = std::min({0.25 * clearance, 0.5 * rho, rho * std::sin(left_sector / 4.0)});
    const double phi = std::asin(delta / rho);

    const cplx mid0 = 0.5 * (e0 + e1), mid1 = 0.5 * (e1 + e2);
    SqrtTracker walk(roots, leading, mid0, branch_here);
    walk.line_to(mid0 + delta * I * u0);
    walk.line_to(e1 + std::polar(rho, theta_back - phi));
    walk.arc_clockwise(e1, left_sector - 2.0 * phi);
    walk.line_to(mid1 + delta * I * u1);
    walk.line_to(mid1);

    const cplx ratio = walk.value() / branch_next;
    if (std::abs(ratio - 1.0) < 1e-6) return 1;
    if (std::abs(ratio + 1.0) < 1e-6) return -1;
    throw NumericError("hyperelliptic periods: branch continuation did not close (ratio " +
                       std::to_string(ratio.real()) + "+" + std::to_string(ratio.imag()) + "i)");
}

std::string point_label(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", z.real(), z.imag());
    return buf;
}

} // namespace

PeriodData hyperelliptic_raw_periods(const HyperellipticCurve& curve, int nodes) {
    if (nodes < 4) throw DomainError("hyperelliptic periods: need at least 4 nodes");
    const auto& pts = curve.branch_points();
    const cplx leading = curve.leading_coefficient();
    const int g = curve.genus();
    const std::size_t n = pts.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (pts[i].real() != pts[j].real()) return pts[i].real() < pts[j].real();
        return pts[i].imag() < pts[j].imag();
    });
    std::vector<cplx> chain;
    for (auto i : order) chain.push_back(pts[i]);

    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t k = j + 2; k + 1 < n; ++k) {
            if (segments_intersect(chain[j], chain[j + 1], chain[k], chain[k + 1])) {
                throw UnsupportedError("hyperelliptic periods: branch-point chain is not simple");
            }
        }
    }

    const std::size_t cycles = 2 * static_cast<std::size_t>(g);
    std::vector<std::vector<cplx>> seg_n(cycles), seg_2n(cycles);
    std::vector<cplx> mid_branch(cycles + 1);
    for (std::size_t j = 0; j < cycles; ++j) {
        seg_n[j] = chebyshev_segment_moments(pts, leading, g, chain[j], chain[j + 1], nodes);
        seg_2n[j] = chebyshev_segment_moments(pts, leading, g, chain[j], chain[j + 1], 2 * nodes);
    }
    for (std::size_t j = 0; j <= cycles && j + 1 < n; ++j) {
        mid_branch[j] = segment_branch_at_midpoint(pts, leading, chain[j], chain[j + 1]);
    }

    std::vector<int> sheet(cycles, 1);
    for (std::size_t j = 0; j + 1 < cycles; ++j) {
        const int sigma = continuation_sign(pts, leading, chain, j, double(sheet[j]) * mid_branch[j], mid_branch[j + 1]);
        sheet[j + 1] = sigma;
    }

    PeriodData out;
    RawPeriodTable& table = out.table;
    table.entries.resize(static_cast<Eigen::Index>(cycles), g);
    table.quadrature_nodes = nodes;
    double err = 0.0;
    for (std::size_t j = 0; j < cycles; ++j) {
        for (int k = 0; k < g; ++k) {
            const cplx v = 2.0 * double(sheet[j]) * seg_n[j][static_cast<std::size_t>(k)];
            const cplx w = 2.0 * double(sheet[j]) * seg_2n[j][static_cast<std::size_t>(k)];
            table.entries(static_cast<Eigen::Index>(j), k) = v;
            err = std::max(err, std::abs(v - w));
        }
        table.row_labels.push_back("gamma" + std::to_string(j + 1) + point_label(chain[j]) + point_label(chain[j + 1]));
    }
    for (int k = 1; k <= g; ++k) table.col_labels.push_back(k == 1 ? "dx/y" : (k == 2 ? "x dx/y" : "x^" + std::to_string(k - 1) + " dx/y"));
    table.est_error = err;

    HomologyBasis& hom = out.homology;
    for (std::size_t j = 0; j < cycles; ++j) {
        hom.cycles.push_back({table.row_labels[j],
                              {{order[j], order[j + 1], sheet[j]}, {order[j + 1], order[j], -sheet[j]}}});
    }
    hom.intersection_matrix = IntMatrix::Zero(static_cast<Eigen::Index>(cycles), static_cast<Eigen::Index>(cycles));
    for (Eigen::Index j = 0; j + 1 < static_cast<Eigen::Index>(cycles); ++j) {
        hom.intersection_matrix(j, j + 1) = 1;
        hom.intersection_matrix(j + 1, j) = -1;
    }
    hom.symplectic_transform = symplectic_reduce(hom.intersection_matrix);
    return out;
}

PeriodData hyperelliptic_raw_periods_adaptive(const HyperellipticCurve& curve, const QuadraturePolicy& policy) {
    int nodes = policy.initial_nodes;
    PeriodData data = hyperelliptic_raw_periods(curve, nodes);
    while (data.table.est_error > policy.tolerance && 2 * nodes <= policy.max_nodes) {
        nodes *= 2;
        data = hyperelliptic_raw_periods(curve, nodes);
    }
    return data;
}

} // namespace rslab
