#pragma once

#include <cstddef>
#include <vector>

namespace ringshaper {

// Physical design constants, all SI (meters, 1/m, V/m).
//
// W0 and WT are the full truncated support widths of the input ring and the
// on-axis target; E_T is always derived from the Plancherel normalization
// (bounds::normalize_target), never set by hand.
struct DesignParams {
    double k = 0.0;    // wavenumber [1/m]
    double r0 = 0.0;   // ring radius [m]
    double W0 = 0.0;   // input support width [m]
    double zd = 0.0;   // target distance [m]
    double WT = 0.0;   // target support width [m]
    double E0 = 0.0;   // input peak field [V/m]
    double ET = 0.0;   // target peak field [V/m], derived

    // Throws ConfigError when a field is nonpositive, W0 >= 2 r0, or
    // WT >= 2 zd (target interval touching the source plane).
    void validate() const;
};

// Uniform node grid in the squared-radius coordinate s = rho^2 [m^2].
// Endpoints are exact squares of the r-support endpoints.
struct SGrid {
    double s_min = 0.0;
    double s_max = 0.0;
    int n = 0;

    double ds() const { return (s_max - s_min) / (n - 1); }
    double s(int m) const { return s_min + m * ds(); }
    std::vector<double> nodes() const;
};

// Uniform node grid in the reciprocal coordinate Omega = k/(2z) [1/m^2].
// Covers exactly the target interval S_G(zd, WT).
struct OmegaGrid {
    double omega_min = 0.0;
    double omega_max = 0.0;
    int n = 0;

    double domega() const { return (omega_max - omega_min) / (n - 1); }
    double omega(int j) const { return omega_min + j * domega(); }
    std::vector<double> nodes() const;
    double width() const { return omega_max - omega_min; }
    double center() const { return 0.5 * (omega_min + omega_max); }
};

// Omega = k/(2z). Strictly decreasing in z; throws std::domain_error for
// nonpositive z.
double omega_of_z(double z, double k);

// z = k/(2 Omega); inverse of omega_of_z. Throws for nonpositive Omega.
double z_of_omega(double omega, double k);

// Grids satisfying the type invariants:
//   s in [(r0-W0/2)^2, (r0+W0/2)^2],  Omega in [k/(2zd+WT), k/(2zd-WT)].
std::pair<SGrid, OmegaGrid> build_grids(const DesignParams& p, int n_s, int n_omega);

}  // namespace ringshaper
