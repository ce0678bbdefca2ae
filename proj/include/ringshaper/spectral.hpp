#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ringshaper/fourier.hpp"
#include "ringshaper/grids.hpp"

namespace ringshaper {

// Complex field samples on a declared 1-D grid (Omega or z).
struct ComplexField {
    std::vector<double> grid;
    std::vector<cplx> v;
    // Set when the Omega window captured less than 99.99% of the spectral
    // mass predicted by Plancherel (result truncated / aliased).
    bool captured_mass_warning = false;

    std::vector<double> abs() const;
};

// G(Omega) = ET * F_T(k/(2 Omega)) / Omega on an Omega grid, supported
// exactly on S_G.
struct TargetSpectrum {
    OmegaGrid grid;
    std::vector<double> G;
};

TargetSpectrum make_target_spectrum(const std::function<double(double)>& F_T_of_z, double ET,
                                    double k, const OmegaGrid& grid);

// G sampled on every frame bin, zero outside [omega_lo_support, omega_hi_support].
std::vector<double> make_target_on_frame(const std::function<double(double)>& F_T_of_z, double ET,
                                         double k, const FourierFrame& frame,
                                         double omega_lo_support, double omega_hi_support);

// F[g e^{i phi}](Omega) = integral g(s) e^{i phi(s)} e^{i Omega s} ds,
// trapezoid weights on the s-grid, chirp-factored fast evaluation.
ComplexField forward_field(const std::vector<double>& g, const std::vector<double>& phi,
                           const SGrid& s, const OmegaGrid& window);

// Same integral via the direct O(N^2) sum; the always-available oracle.
ComplexField forward_field_direct(const std::vector<double>& g, const std::vector<double>& phi,
                                  const SGrid& s, const OmegaGrid& window);

// On-axis field E(0, z) = -i Omega F[g e^{i phi}](Omega) at Omega = k/(2z).
// Uniformly-mappable z arrays ride the fast transform, otherwise the direct
// sum is evaluated per point. Throws std::domain_error for z <= 0.
ComplexField on_axis_field(const std::vector<double>& g, const std::vector<double>& phi,
                           const SGrid& s, const std::vector<double>& z, double k);

// Off-axis field on an (r, z) mesh via the Hankel kernel,
//   E(r,z) = -i Omega e^{i Omega r^2} integral g e^{i phi} e^{i Omega s}
//            J0(2 Omega sqrt(s) r) ds.
// mesh[iz][ir]; z columns evaluate in parallel. Throws ResolutionError when
// the s-grid cannot resolve the integrand oscillation.
std::vector<std::vector<cplx>> off_axis_field(const std::vector<double>& g,
                                              const std::vector<double>& phi, const SGrid& s,
                                              const std::vector<double>& r,
                                              const std::vector<double>& z, double k);

// I[phi] = || G - |F[g e^{i phi}]| ||_L2 over the frame's full window with
// G extended by zero: light outside the target support is penalized.
// G_ext lives on frame bins; g and phi on frame object nodes.
double error_functional(const FourierFrame& frame, const std::vector<double>& G_ext,
                        const std::vector<double>& g, const std::vector<double>& phi);

// L2 error restricted to S_G(zd_prime, WT_prime). The subinterval must lie
// inside the global target interval.
double local_error(const std::function<double(double)>& F_T_of_z, double ET,
                   const std::vector<double>& g, const std::vector<double>& phi, const SGrid& s,
                   const DesignParams& p, double zd_prime, double WT_prime, int n_quad = 1025);

// P_R = integral_0^R |E(r)|^2 r dr on the sampled column (trapezoid, partial
// last interval). Throws std::domain_error when R exceeds the grid.
double power_in_radius(const std::vector<double>& r, const std::vector<cplx>& column, double R);

}  // namespace ringshaper
