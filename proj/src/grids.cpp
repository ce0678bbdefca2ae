#include "ringshaper/grids.hpp"

#include <stdexcept>

#include "ringshaper/errors.hpp"

namespace ringshaper {

void DesignParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw ConfigError(std::string("DesignParams: ") + name + " must be strictly positive");
    };
    positive(k, "k");
    positive(r0, "r0");
    positive(W0, "W0");
    positive(zd, "zd");
    positive(WT, "WT");
    positive(E0, "E0");
    if (!(W0 < 2.0 * r0))
        throw ConfigError("DesignParams: W0 must be smaller than 2*r0 (ring support must stay away from the axis)");
    if (!(WT < 2.0 * zd))
        throw ConfigError("DesignParams: target interval touches the source plane (WT >= 2*zd)");
}

std::vector<double> SGrid::nodes() const {
    std::vector<double> x(n);
    for (int m = 0; m < n; ++m) x[m] = s(m);
    return x;
}

std::vector<double> OmegaGrid::nodes() const {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = omega(j);
    return x;
}

double omega_of_z(double z, double k) {
    if (!(z > 0.0)) throw std::domain_error("omega_of_z: z must be positive");
    return k / (2.0 * z);
}

double z_of_omega(double omega, double k) {
    if (!(omega > 0.0)) throw std::domain_error("z_of_omega: omega must be positive");
    return k / (2.0 * omega);
}

std::pair<SGrid, OmegaGrid> build_grids(const DesignParams& p, int n_s, int n_omega) {
    p.validate();
    if (n_s < 16 || n_omega < 16)
        throw ConfigError("build_grids: sample counts must be at least 16");

    const double r_lo = p.r0 - 0.5 * p.W0;
    const double r_hi = p.r0 + 0.5 * p.W0;
    SGrid s{r_lo * r_lo, r_hi * r_hi, n_s};

    OmegaGrid w{p.k / (2.0 * p.zd + p.WT), p.k / (2.0 * p.zd - p.WT), n_omega};
    return {s, w};
}

}  // namespace ringshaper
