#pragma once

#include <functional>
#include <vector>

#include "ringshaper/bounds.hpp"
#include "ringshaper/grids.hpp"

namespace ringshaper {

// Solution of the caustic-map initial value problem in nondimensional form,
//   d zbar_c / d rhobar = 2 pi kbar (E0^2 f^2 / (ET^2 F_T^2(zbar_c))) rhobar,
//   zbar_c(1 - W0/2r0) = 1 - WT/2zd,
// on a uniform rhobar grid. Slopes are the exact right-hand side at the
// nodes; evaluation between nodes uses monotone cubic Hermite segments.
struct CausticMap {
    std::vector<double> rho;  // rhobar nodes
    std::vector<double> z;    // zbar_c values, strictly increasing
    std::vector<double> dz;   // exact dzbar_c/drhobar at the nodes
    double kbar = 0.0;        // r0^2 k / zd
    double rho_lo = 0.0, rho_hi = 0.0;
    double z_lo = 0.0, z_hi = 0.0;  // 1 -+ WT/2zd (z_hi is the lemma's endpoint)
    bool stiff_region_warning = false;

    double endpoint_error() const;       // |z.back() - z_hi| / z_hi
    double z_at(double rhobar) const;
    double dz_at(double rhobar) const;
    double rho_at(double zbar) const;    // inverse map
};

// Shaper phase from the map, phibar(rhobar) = -int u / zbar_c(u) du, with
// phibar(rho_lo) = 0. Dimensional phase phi = (k r0^2 / zd) phibar(rho/r0).
struct PhaseFunction {
    std::vector<double> rho;
    std::vector<double> phibar;
    std::vector<double> dphibar;  // exact -rhobar / zbar_c
    double scale = 0.0;           // k r0^2 / zd
    double r0 = 0.0;

    double phibar_at(double rhobar) const;
    double phi_at_r(double r) const { return scale * phibar_at(r / r0); }
    double phi_at_s(double s) const;
};

// Fixed-step classical RK4 on n_steps intervals. f and F_T are the analytic
// (untruncated) profiles; F_T^2 is floored at 1e-12 of its peak before
// inversion, which only matters at the support edges.
CausticMap solve_caustic_map(const Profile1D& f, const Profile1D& F_T, const DesignParams& p,
                             int n_steps);

// Composite Simpson on the map nodes (midpoint values from the Hermite
// interpolant), matching the solver's O(h^4) accuracy.
PhaseFunction integrate_phase(const CausticMap& map, const DesignParams& p);

// |E(0,z)| = E0 sqrt(2 pi kbar) f(rho_c) rho_c^{1/2} (dz_c/drho)^{-1/2};
// equals ET F_T(z) by construction when the map solves the IVP. Zero outside
// the target support.
std::vector<double> on_axis_asymptotic(const CausticMap& map, const Profile1D& f,
                                       const DesignParams& p, const std::vector<double>& z);

struct OffAxisAsymptotic {
    double value = 0.0;
    bool validity_advisory = false;  // outside |z-zd| <~ WT/2 or the central lobes
};

// |E(r,z)| = ET F_T(z) J0(kbar r rho_c / (2 zbar r0)) in the focal region.
OffAxisAsymptotic off_axis_asymptotic(const CausticMap& map, const Profile1D& F_T,
                                      const DesignParams& p, double r, double z);

}  // namespace ringshaper
