#pragma once

#include <functional>
#include <vector>

#include "ringshaper/grids.hpp"

namespace ringshaper {

// Truncation threshold shared by all compact-support constructions.
// exp(-9) ~ 1.2e-4: values below this are treated as outside the support.
inline constexpr double kTruncationThreshold = 1.2340980408667956e-4;  // exp(-9)

enum class Coord { R, S, Z, Omega };

// Real nonnegative samples of a shape profile (peak <= 1 before scaling) on
// a uniform 1-D grid with a declared coordinate. Values vanish outside
// [support_lo, support_hi].
struct SampledProfile {
    Coord coord = Coord::R;
    std::vector<double> x;
    std::vector<double> v;
    double support_lo = 0.0;
    double support_hi = 0.0;
};

// exp(-(r-r0)^2 / W0p^2), the annular input shape.
struct GaussianRing {
    double r0 = 0.0;
    double W0p = 0.0;  // Gaussian scale W0' [m]

    double operator()(double r) const;
    // Full truncated support width; 6*W0p at the exp(-9) threshold.
    double support_width(double threshold = kTruncationThreshold) const;
};

// exp(-(z-zd)^{2n} / WTp^{2n}), the flat-top target shape.
struct SuperGaussian {
    double zd = 0.0;
    double WTp = 0.0;  // super-Gaussian scale WT' [m]
    int n = 1;

    double operator()(double z) const;
    // Full truncated width; 2*3^{1/n}*WTp at the exp(-9) threshold.
    double support_width(double threshold = kTruncationThreshold) const;
};

// (4/5) exp(-(z-zd)^16/WTp^16) (cos^2((z-zd) m / (2 pi WTp)) + 1/4).
// Peak value 1 at z = zd; modulation floor 1/5 of the envelope.
struct OscillatoryTarget {
    double zd = 0.0;
    double WTp = 0.0;
    int m = 1;

    double operator()(double z) const;
    double envelope(double z) const;  // order-8 super-Gaussian factor
    // Width of the envelope support (the modulation never reaches zero).
    double support_width(double threshold = kTruncationThreshold) const;
    // Period of the intensity modulation in z near zd: 2 pi^2 WTp / m.
    double modulation_period() const;
};

// Threshold comparison for truncation. Support-edge samples sit exactly at
// threshold*peak in exact arithmetic; the relative slack keeps them from
// being zeroed by roundoff (which would put an O(h) notch under the
// quadratures).
inline bool above_threshold(double value, double peak, double threshold) {
    return value >= threshold * peak * (1.0 - 1e-9);
}

// Samples an analytic shape on a grid and zeroes everything below the
// threshold. support_lo/hi report the analytic crossing points.
SampledProfile sample_profile(const std::function<double(double)>& shape, Coord coord,
                              const std::vector<double>& grid, double center,
                              double support_halfwidth);

// Zeroes values below the threshold in place and tightens the recorded
// support to the surviving samples. Throws std::domain_error when nothing
// survives (empty support).
void truncate(SampledProfile& p, double threshold = kTruncationThreshold);

}  // namespace ringshaper
