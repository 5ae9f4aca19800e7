#include "rslab/curves.hpp"

#include "rslab/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rslab {

HyperellipticCurve::HyperellipticCurve(std::vector<cplx> branch_points, cplx leading)
    : branch_points_(std::move(branch_points)), leading_(leading) {
    const auto n = branch_points_.size();
    if (n < 3) {
        throw ValidationError("hyperelliptic: need at least 3 branch points (genus >= 1), got " +
                              std::to_string(n));
    }
    for (const auto& e : branch_points_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw ValidationError("hyperelliptic: branch points must be finite");
        }
    }
    if (!std::isfinite(leading_.real()) || !std::isfinite(leading_.imag()) || leading_ == 0.0) {
        throw ValidationError("hyperelliptic: leading coefficient must be finite and nonzero");
    }
    double scale = 0.0;
    for (const auto& e : branch_points_) scale = std::max(scale, std::abs(e));
    const double tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(branch_points_[i] - branch_points_[j]) <= tol) {
                throw ValidationError("hyperelliptic: branch points must be pairwise distinct "
                                      "(f squarefree); points " +
                                      std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
        }
    }
}

bool HyperellipticCurve::all_branch_points_real(double tol) const {
    return std::all_of(branch_points_.begin(), branch_points_.end(),
                       [tol](const cplx& e) { return std::abs(e.imag()) <= tol; });
}

std::vector<Monomial> monomials_of_degree(int n) {
    std::vector<Monomial> out;
    // grevlex, x > y > z: smaller z-exponent first, then smaller y-exponent.
    for (int c = 0; c <= n; ++c) {
        for (int b = 0; b <= n - c; ++b) {
            out.push_back({{n - b - c, b, c}});
        }
    }
    return out;
}

std::string to_string(const Monomial& m) {
    static constexpr char names[3] = {'x', 'y', 'z'};
    std::ostringstream os;
    bool any = false;
    for (int v = 0; v < 3; ++v) {
        if (m.exp[v] == 0) continue;
        os << names[v];
        if (m.exp[v] > 1) os << '^' << m.exp[v];
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

PlaneCurveModel::PlaneCurveModel(int degree) : degree_(degree) {
    if (degree != 4 && degree != 5) {
        throw ValidationError("plane: degree must be 4 or 5 (H^0(2K) equals the degree-2(d-3) "
                              "polynomial space only there), got " +
                              std::to_string(degree));
    }
    diff_ = monomials_of_degree(degree - 3);
    quad_ = monomials_of_degree(2 * (degree - 3));
    product_.assign(diff_.size(), std::vector<std::size_t>(diff_.size()));
    for (std::size_t i = 0; i < diff_.size(); ++i) {
        for (std::size_t j = 0; j < diff_.size(); ++j) {
            const Monomial prod = diff_[i] * diff_[j];
            const auto it = std::find(quad_.begin(), quad_.end(), prod);
            product_[i][j] = static_cast<std::size_t>(it - quad_.begin());
        }
    }
}

FermatCurve::FermatCurve(int degree) : degree_(degree) {
    if (degree < 4) {
        throw ValidationError("fermat: degree must be >= 4 (genus >= 3), got " + std::to_string(degree));
    }
    for (int r = 1; r < degree; ++r) {
        for (int s = 1; r + s <= degree - 1; ++s) diffs_.push_back({r, s});
    }
}

int genus(const CurveModel& curve) {
    return std::visit([](const auto& c) { return c.genus(); }, curve);
}

int moduli_count(int g) {
    if (g < 2) throw DomainError("moduli_count: requires g >= 2, got " + std::to_string(g));
    return 3 * g - 3;
}

int period_count(int g) {
    if (g < 1) throw DomainError("period_count: requires g >= 1, got " + std::to_string(g));
    return g * (g + 1) / 2;
}

} // namespace rslab
