#include "ringshaper/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringshaper {

double GaussianRing::operator()(double r) const {
    const double u = (r - r0) / W0p;
    return std::exp(-u * u);
}

double GaussianRing::support_width(double threshold) const {
    // exp(-x^2) = threshold  =>  x = sqrt(-ln threshold); 3 at exp(-9).
    return 2.0 * std::sqrt(-std::log(threshold)) * W0p;
}

double SuperGaussian::operator()(double z) const {
    const double u = (z - zd) / WTp;
    return std::exp(-std::pow(u * u, n));
}

double SuperGaussian::support_width(double threshold) const {
    // exp(-x^{2n}) = threshold  =>  x = (-ln threshold)^{1/2n}; 3^{1/n} at exp(-9).
    return 2.0 * std::pow(-std::log(threshold), 1.0 / (2.0 * n)) * WTp;
}

double OscillatoryTarget::envelope(double z) const {
    const double u = (z - zd) / WTp;
    const double u2 = u * u;
    return std::exp(-u2 * u2 * u2 * u2 * u2 * u2 * u2 * u2);  // u^16
}

double OscillatoryTarget::operator()(double z) const {
    const double c = std::cos((z - zd) * m / (2.0 * std::numbers::pi * WTp));
    return 0.8 * envelope(z) * (c * c + 0.25);
}

double OscillatoryTarget::support_width(double threshold) const {
    return 2.0 * std::pow(-std::log(threshold), 1.0 / 16.0) * WTp;
}

double OscillatoryTarget::modulation_period() const {
    // cos^2 has period pi in its argument (z-zd) m / (2 pi WTp).
    return 2.0 * std::numbers::pi * std::numbers::pi * WTp / m;
}

SampledProfile sample_profile(const std::function<double(double)>& shape, Coord coord,
                              const std::vector<double>& grid, double center,
                              double support_halfwidth) {
    SampledProfile p;
    p.coord = coord;
    p.x = grid;
    p.v.resize(grid.size());
    p.support_lo = center - support_halfwidth;
    p.support_hi = center + support_halfwidth;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double xi = grid[i];
        p.v[i] = (xi < p.support_lo || xi > p.support_hi) ? 0.0 : shape(xi);
    }
    return p;
}

void truncate(SampledProfile& p, double threshold) {
    std::size_t first = p.v.size(), last = 0;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        if (p.v[i] < threshold) {
            p.v[i] = 0.0;
        } else {
            first = std::min(first, i);
            last = i;
        }
    }
    if (first == p.v.size())
        throw std::domain_error("truncate: profile is entirely below the threshold (empty support)");
    p.support_lo = p.x[first];
    p.support_hi = p.x[last];
}

}  // namespace ringshaper
