#pragma once

#include "rslab/homology.hpp"

namespace rslab {

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// overflow-checked 64-bit arithmetic and repeats the elimination with
/// arbitrary-precision integers if any intermediate overflows.
int exact_rank(const IntMatrix& m);

/// True iff m is square with full rank over the rationals.
bool is_full_rank_square(const IntMatrix& m);

} // namespace rslab
