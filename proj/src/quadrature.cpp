#include "rslab/quadrature.hpp"

#include "rslab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rslab {

namespace {

constexpr cplx I{0.0, 1.0};

struct Segment {
    cplx mid;
    cplx half;
    std::vector<cplx> others;
    std::vector<cplx> sqrt_w;
};

double distance_to_segment(cplx p, cplx a, cplx b) {
    const cplx d = b - a;
    double t = std::real((p - a) * std::conj(d)) / std::norm(d);
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

Segment prepare(std::span<const cplx> roots, cplx a, cplx b) {
    if (a == b) throw DomainError("segment integral: endpoints coincide");
    const double len = std::abs(b - a);
    const double match = 1e-14 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    bool found_a = false, found_b = false;
    Segment seg{0.5 * (a + b), 0.5 * (b - a), {}, {}};
    for (const auto& e : roots) {
        if (!found_a && std::abs(e - a) <= match) {
            found_a = true;
        } else if (!found_b && std::abs(e - b) <= match) {
            found_b = true;
        } else {
            if (distance_to_segment(e, a, b) <= 1e-12 * len) {
                throw SingularIntegrandError("segment integral: a root of f lies on the segment");
            }
            seg.others.push_back(e);
        }
    }
    if (!found_a || !found_b) throw DomainError("segment integral: endpoints must be roots of f");
    for (const auto& e : seg.others) seg.sqrt_w.push_back(std::sqrt(seg.mid - e));
    return seg;
}

} // namespace

std::vector<cplx> chebyshev_segment_moments(std::span<const cplx> roots, cplx leading, int kmax, cplx a, cplx b,
                                            int nodes) {
    if (nodes < 4) throw DomainError("segment integral: need at least 4 nodes");
    if (kmax < 1) throw DomainError("segment integral: k must be >= 1");
    const Segment seg = prepare(roots, a, b);
    const cplx scale = I / std::sqrt(leading);
    std::vector<cplx> acc(static_cast<std::size_t>(kmax), 0.0);
    for (int i = 0; i < nodes; ++i) {
        const double theta = std::numbers::pi * (2.0 * i + 1.0) / (2.0 * nodes);
        const cplx x = seg.mid + seg.half * std::cos(theta);
        cplx prod = 1.0;
        for (std::size_t j = 0; j < seg.others.size(); ++j) {
            prod *= seg.sqrt_w[j] * std::sqrt((x - seg.others[j]) / (seg.mid - seg.others[j]));
        }
        cplx term = scale / prod;
        for (auto& v : acc) {
            v += term;
            term *= x;
        }
    }
    for (auto& v : acc) v *= std::numbers::pi / nodes;
    return acc;
}

cplx chebyshev_segment_integral(std::span<const cplx> roots, cplx leading, int k, cplx a, cplx b, int nodes) {
    if (k < 1) throw DomainError("segment integral: k must be >= 1");
    return chebyshev_segment_moments(roots, leading, k, a, b, nodes).back();
}

cplx segment_branch_at_midpoint(std::span<const cplx> roots, cplx leading, cplx a, cplx b) {
    const Segment seg = prepare(roots, a, b);
    cplx prod = std::sqrt(leading) * (-I) * seg.half;
    for (const auto& s : seg.sqrt_w) prod *= s;
    return prod;
}

} // namespace rslab
