#pragma once

#include "rslab/periods.hpp"

#include <cstdint>

namespace rslab {

/// Membership data for the Siegel upper half-space H_g.
struct SiegelValidation {
    double symmetry_residual = 0.0; ///< max |m_ij - m_ji|
    double min_im_eigenvalue = 0.0; ///< smallest eigenvalue of (Im m + Im m^T) / 2
    double tolerance = 0.0;
    bool is_member = false;         ///< residual <= tolerance and min eigenvalue > 0
};

/// Throws ValidationError for non-square or non-finite input, DomainError for tol <= 0.
SiegelValidation validate_siegel(const PeriodMatrix& m, double tol = 1e-8);

/// S + i (L L^T + 1e-6 I): S symmetric with upper-triangle entries uniform in
/// [-scale, scale] drawn row by row, then L drawn row-major from the same
/// range, all from SplitMix64(seed).
PeriodMatrix random_siegel(int g, std::uint64_t seed, double scale = 1.0);

} // namespace rslab
