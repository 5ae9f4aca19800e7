#pragma once

/**
 * Curve models whose periods and moduli the library studies.
 *
 * Three models are supported:
 *  - HyperellipticCurve: y^2 = c * prod_k (x - e_k), differentials x^{k-1} dx / y, k = 1..g.
 *  - PlaneCurveModel:    smooth plane curve of degree 4 or 5, differentials are the
 *                        degree-(d-3) monomials in (x, y, z).
 *  - FermatCurve:        x^d + y^d = 1, differentials x^{r-1} y^{s-d} dx with r, s >= 1, r + s <= d - 1.
 *
 * All models are immutable after construction; constructors validate and throw
 * ValidationError naming the violated rule.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rslab {

using cplx = std::complex<double>;

class HyperellipticCurve {
  public:
    HyperellipticCurve(std::vector<cplx> branch_points, cplx leading = 1.0);

    const std::vector<cplx>& branch_points() const noexcept { return branch_points_; }
    cplx leading_coefficient() const noexcept { return leading_; }
    int degree() const noexcept { return static_cast<int>(branch_points_.size()); }
    /// True iff deg f is odd, i.e. infinity is a branch point.
    bool point_at_infinity_is_branch() const noexcept { return degree() % 2 == 1; }
    int genus() const noexcept { return (degree() + 1) / 2 - 1; }
    bool all_branch_points_real(double tol = 0.0) const;

  private:
    std::vector<cplx> branch_points_;
    cplx leading_;
};

/// Exponent triple (x, y, z) of a monomial in three variables.
struct Monomial {
    std::array<int, 3> exp{};

    int degree() const noexcept { return exp[0] + exp[1] + exp[2]; }
    Monomial operator*(const Monomial& o) const noexcept {
        return {{exp[0] + o.exp[0], exp[1] + o.exp[1], exp[2] + o.exp[2]}};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All monomials of total degree n in graded reverse lexicographic order with
/// x > y > z (for n = 2: x^2, xy, y^2, xz, yz, z^2).
std::vector<Monomial> monomials_of_degree(int n);

std::string to_string(const Monomial& m);

class PlaneCurveModel {
  public:
    explicit PlaneCurveModel(int degree);

    int degree() const noexcept { return degree_; }
    int genus() const noexcept { return (degree_ - 1) * (degree_ - 2) / 2; }
    /// Basis of holomorphic differentials: degree-(d-3) monomials.
    const std::vector<Monomial>& diff_monomials() const noexcept { return diff_; }
    /// Coordinate space of quadratic differentials: degree-2(d-3) monomials.
    const std::vector<Monomial>& quad_monomials() const noexcept { return quad_; }
    /// Index into quad_monomials() of diff_monomials()[i] * diff_monomials()[j].
    std::size_t product_index(std::size_t i, std::size_t j) const { return product_[i][j]; }

  private:
    int degree_;
    std::vector<Monomial> diff_;
    std::vector<Monomial> quad_;
    std::vector<std::vector<std::size_t>> product_;
};

/// Exponent pair (r, s) of the Fermat differential x^{r-1} y^{s-d} dx.
struct DiffExponent {
    int r;
    int s;
    friend bool operator==(const DiffExponent&, const DiffExponent&) = default;
};

class FermatCurve {
  public:
    explicit FermatCurve(int degree);

    int degree() const noexcept { return degree_; }
    int genus() const noexcept { return (degree_ - 1) * (degree_ - 2) / 2; }
    /// Ordered by r, then s.
    const std::vector<DiffExponent>& diff_exponents() const noexcept { return diffs_; }

  private:
    int degree_;
    std::vector<DiffExponent> diffs_;
};

using CurveModel = std::variant<HyperellipticCurve, PlaneCurveModel, FermatCurve>;

int genus(const CurveModel& curve);

/// 3g - 3, the dimension of the moduli space. Throws DomainError for g < 2.
int moduli_count(int g);

/// g(g+1)/2, the number of independent period matrix entries.
int period_count(int g);

} // namespace rslab
