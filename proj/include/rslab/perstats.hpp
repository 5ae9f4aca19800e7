#pragma once

#include "rslab/curves.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rslab {

/// Squared moduli sorted in descending order.
struct Spectrum {
    std::vector<double> values;
    std::size_t source_count = 0;
};

/// s_n ~ C n^{-exponent}, fitted on (log n, log s_n) over positive entries.
struct PowerLawFit {
    double exponent = 0.0;
    double intercept = 0.0; ///< log C
    double r_squared = 0.0;
    std::size_t excluded_zeros = 0;
};

/// Order-4 circular concentration of arguments: r4 = |mean exp(4 i theta)|.
struct BandLimitScore {
    double r4 = 0.0;
    double score = 0.0; ///< 1 - r4; 0 when every argument is a multiple of pi/2
};

struct HistogramBin {
    double center;
    std::size_t count;
};

Spectrum spectrum(std::span<const cplx> values);

/// Throws ValidationError with fewer than 3 positive entries.
PowerLawFit fit_power_law(const Spectrum& s);

/// Fraction of total energy in the k largest entries; 1 <= k <= source_count.
double best_k_energy(const Spectrum& s, std::size_t k);

BandLimitScore band_limit_score(std::span<const cplx> values);

/// Counts of arguments of nonzero values in `bins` equal bins over [-pi, pi);
/// an argument of exactly pi wraps to the first bin.
std::vector<HistogramBin> arg_histogram(std::span<const cplx> values, int bins);

} // namespace rslab
