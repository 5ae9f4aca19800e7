#include "rslab/homology.hpp"

#include "rslab/error.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include <Eigen/LU>

namespace rslab {

namespace {

std::int64_t checked_muladd(std::int64_t acc, std::int64_t c, std::int64_t x) {
    std::int64_t prod = 0, sum = 0;
    if (__builtin_mul_overflow(c, x, &prod) || __builtin_add_overflow(acc, prod, &sum)) {
        throw NumericError("symplectic reduction: 64-bit overflow");
    }
    return sum;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Simultaneous basis change on the generator list: index r += c * index s.
struct Reducer {
    IntMatrix g;
    IntMatrix t;

    void add(Eigen::Index r, Eigen::Index s, std::int64_t c) {
        if (c == 0) return;
        const Eigen::Index n = g.rows();
        for (Eigen::Index k = 0; k < n; ++k) t(r, k) = checked_muladd(t(r, k), c, t(s, k));
        for (Eigen::Index k = 0; k < n; ++k) g(r, k) = checked_muladd(g(r, k), c, g(s, k));
        for (Eigen::Index k = 0; k < n; ++k) g(k, r) = checked_muladd(g(k, r), c, g(k, s));
    }
    void swap(Eigen::Index r, Eigen::Index s) {
        if (r == s) return;
        t.row(r).swap(t.row(s));
        g.row(r).swap(g.row(s));
        g.col(r).swap(g.col(s));
    }
    void negate(Eigen::Index r) {
        t.row(r) *= -1;
        g.row(r) *= -1;
        g.col(r) *= -1;
    }
};

} // namespace

IntMatrix standard_symplectic_form(int g) {
    IntMatrix j = IntMatrix::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

IntMatrix symplectic_reduce(const IntMatrix& gram) {
    const Eigen::Index n = gram.rows();
    if (gram.cols() != n) throw ValidationError("symplectic reduction: Gram matrix must be square");
    if (gram != IntMatrix(-gram.transpose())) {
        throw ValidationError("symplectic reduction: Gram matrix must be skew-symmetric");
    }
    Reducer red{gram, IntMatrix::Identity(n, n)};
    Eigen::Index p = 0;
    while (p + 1 < n) {
        // Smallest nonzero entry of the unreduced block.
        Eigen::Index bi = -1, bj = -1;
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (Eigen::Index i = p; i < n; ++i) {
            for (Eigen::Index j = p; j < n; ++j) {
                const std::int64_t v = red.g(i, j);
                if (v != 0 && std::llabs(v) < best) {
                    best = std::llabs(v);
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi < 0) break;
        red.swap(p, bi);
        const Eigen::Index col = (bj == p) ? bi : bj;
        red.swap(p + 1, col);
        if (red.g(p, p + 1) < 0) red.negate(p + 1);
        const std::int64_t m = red.g(p, p + 1);

        bool clean = true;
        for (Eigen::Index r = p + 2; r < n; ++r) {
            red.add(r, p + 1, -floor_div(red.g(p, r), m));
            red.add(r, p, floor_div(red.g(p + 1, r), m));
            if (red.g(p, r) != 0 || red.g(p + 1, r) != 0) clean = false;
        }
        if (!clean) continue;
        if (m != 1) {
            bool divisible = true;
            for (Eigen::Index r = p + 2; r < n && divisible; ++r) {
                for (Eigen::Index s = p + 2; s < n; ++s) {
                    if (red.g(r, s) % m != 0) {
                        red.add(p, r, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (!divisible) continue;
            throw NumericError("symplectic reduction: intersection form is not unimodular (invariant factor " +
                               std::to_string(m) + ")");
        }
        p += 2;
    }
    const Eigen::Index g = p / 2;
    IntMatrix out(2 * g, n);
    for (Eigen::Index i = 0; i < g; ++i) {
        out.row(i) = red.t.row(2 * i);
        out.row(g + i) = red.t.row(2 * i + 1);
    }
    return out;
}

bool is_consistent(const HomologyBasis& hom) {
    const IntMatrix& x = hom.intersection_matrix;
    const IntMatrix& t = hom.symplectic_transform;
    if (x.rows() != x.cols() || x != IntMatrix(-x.transpose())) return false;
    if (t.cols() != x.rows() || t.rows() % 2 != 0) return false;
    if (static_cast<std::size_t>(x.rows()) != hom.cycles.size()) return false;
    const IntMatrix reduced = t * x * t.transpose();
    if (reduced != standard_symplectic_form(static_cast<int>(t.rows() / 2))) return false;
    if (t.rows() == t.cols()) {
        // Square transform: T X T^T = J with det J = 1 forces det(T)^2 det(X) = 1.
        const double det = x.cast<double>().determinant();
        if (std::abs(std::abs(det) - 1.0) > 1e-9) return false;
    }
    return true;
}

} // namespace rslab
