#include "rslab/perstats.hpp"

#include "rslab/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace rslab {

Spectrum spectrum(std::span<const cplx> values) {
    if (values.empty()) throw ValidationError("spectrum: input is empty");
    Spectrum s;
    s.values.reserve(values.size());
    for (const auto& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("spectrum: non-finite value");
        s.values.push_back(std::norm(z));
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    s.source_count = values.size();
    return s;
}

PowerLawFit fit_power_law(const Spectrum& s) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (s.values[i] > 0.0) {
            xs.push_back(std::log(static_cast<double>(i + 1)));
            ys.push_back(std::log(s.values[i]));
        }
    }
    if (xs.size() < 3) throw ValidationError("fit_power_law: need at least 3 positive entries");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    PowerLawFit fit;
    fit.exponent = -slope;
    fit.intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + slope * xs[i]);
        ss_res += r * r;
    }
    // A flat spectrum is fitted exactly by slope 0.
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    fit.excluded_zeros = s.values.size() - xs.size();
    return fit;
}

double best_k_energy(const Spectrum& s, std::size_t k) {
    if (k < 1 || k > s.source_count || k > s.values.size()) {
        throw ValidationError("best_k_energy: k must lie in [1, " + std::to_string(s.source_count) + "]");
    }
    const double total = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    if (k == s.values.size()) return 1.0;
    if (total == 0.0) return 1.0;
    const double top = std::accumulate(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
    return std::min(1.0, top / total);
}

BandLimitScore band_limit_score(std::span<const cplx> values) {
    cplx acc = 0.0;
    std::size_t n = 0;
    for (const auto& z : values) {
        if (z == 0.0) continue;
        acc += std::polar(1.0, 4.0 * std::arg(z));
        ++n;
    }
    if (n == 0) throw ValidationError("band_limit_score: needs at least one nonzero value");
    BandLimitScore out;
    out.r4 = std::min(1.0, std::abs(acc) / static_cast<double>(n));
    out.score = 1.0 - out.r4;
    return out;
}

std::vector<HistogramBin> arg_histogram(std::span<const cplx> values, int bins) {
    if (bins < 2) throw ValidationError("arg_histogram: bins must be >= 2");
    const double width = 2.0 * std::numbers::pi / bins;
    std::vector<HistogramBin> out;
    for (int b = 0; b < bins; ++b) out.push_back({-std::numbers::pi + (b + 0.5) * width, 0});
    std::size_t total = 0;
    for (const auto& z : values) {
        if (z == 0.0) continue;
        auto b = static_cast<int>(std::floor((std::arg(z) + std::numbers::pi) / width));
        if (b >= bins) b -= bins;
        if (b < 0) b = 0;
        ++out[static_cast<std::size_t>(b)].count;
        ++total;
    }
    if (total == 0) throw ValidationError("arg_histogram: no nonzero values");
    return out;
}

} // namespace rslab
