#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace rslab {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// [[0, I_g], [-I_g, 0]].
IntMatrix standard_symplectic_form(int g);

/**
 * Integer symplectic reduction of a skew-symmetric Gram matrix.
 *
 * `gram` holds intersection numbers of n cycles that generate a lattice whose
 * intersection form is unimodular (the cycles may be dependent). Returns T with
 * 2g rows and n columns such that T * gram * T^T = standard_symplectic_form(g),
 * using only unimodular row operations, so the rows of T are integer
 * combinations of the input cycles forming a symplectic basis (alpha_1..alpha_g,
 * beta_1..beta_g).
 *
 * Throws ValidationError if gram is not square and skew, NumericError if the
 * form is degenerate on the generated lattice (an invariant factor other than 1)
 * or if intermediate entries overflow 64 bits.
 */
IntMatrix symplectic_reduce(const IntMatrix& gram);

/// One leg of a cycle: the lift of the straight segment between two branch
/// points (indices into the curve's branch point list) on a sheet (+1 / -1)
/// relative to the segment's reference branch of sqrt(f).
struct CycleStep {
    std::size_t from;
    std::size_t to;
    int sheet;
};

struct Cycle {
    std::string label;
    std::vector<CycleStep> steps;
};

struct HomologyBasis {
    std::vector<Cycle> cycles;
    IntMatrix intersection_matrix;
    /// Rows: symplectic basis cycles as integer combinations of `cycles`.
    IntMatrix symplectic_transform;
};

/// Checks the basis invariants: intersection matrix skew, and the transform
/// taking it exactly to the standard block form. When the transform is square
/// the intersection matrix must also be unimodular.
bool is_consistent(const HomologyBasis& hom);

} // namespace rslab
