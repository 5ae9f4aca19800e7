#pragma once

#include "rslab/curves.hpp"

#include <span>
#include <vector>

namespace rslab {

/**
 * Integral of x^{k-1} / sqrt(f(x)) along the straight segment from a to b, where
 * f(x) = leading * prod_j (x - roots[j]) and a, b are two of the roots.
 *
 * The substitution x = (a+b)/2 + ((b-a)/2) cos(theta), theta in [0, pi], removes the
 * inverse square-root endpoint singularities; the remaining integrand is smooth and
 * even-periodic in theta, so the N-point Gauss-Chebyshev (midpoint) rule converges
 * geometrically.
 *
 * Branch convention, fixed along the whole segment:
 *   sqrt(f(x)) = sqrt(leading) * (-i h sin theta) * prod_{e != a,b} sqrt(w_e) sqrt((x - e) / w_e),
 * with h = (b-a)/2, w_e = (a+b)/2 - e, and principal square roots. Each factor is
 * continuous because (x - e)/w_e never meets the negative real axis.
 *
 * Throws DomainError if a or b is not a root, a == b, or nodes < 4, and
 * SingularIntegrandError if another root lies on the segment.
 */
cplx chebyshev_segment_integral(std::span<const cplx> roots, cplx leading, int k, cplx a, cplx b, int nodes);

/// Same integral for k = 1..kmax in one pass (element k-1 holds power k-1).
std::vector<cplx> chebyshev_segment_moments(std::span<const cplx> roots, cplx leading, int kmax, cplx a, cplx b,
                                            int nodes);

/// Value of sqrt(f) at the segment midpoint under the convention above.
cplx segment_branch_at_midpoint(std::span<const cplx> roots, cplx leading, cplx a, cplx b);

} // namespace rslab
