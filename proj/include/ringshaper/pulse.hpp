#pragma once

#include <functional>
#include <vector>

#include "ringshaper/bounds.hpp"

namespace ringshaper {

// Linear-chirp design for a Gaussian pulse delivered at zd with duration
// tau_T. Units as used throughout the temporal model: gamma in fs^2/m,
// durations in fs, distances in m (the mixed products are dimensionless).
struct ChirpDesign {
    double gamma = 0.0;   // group velocity dispersion [fs^2/m]
    double tau_T = 0.0;   // target 1/e duration at zd [fs]
    double tau0 = 0.0;    // initial duration [fs]
    double alpha = 0.0;   // chirp parameter [fs]
    double zd = 0.0;      // target distance [m]
};

// alpha^2 = (tau_T^4 + 4 zd^2 gamma^2) / (2 zd gamma),
// tau0^2  = (tau_T^4 + 4 zd^2 gamma^2) / tau_T^2.
// Throws std::domain_error for gamma == 0 (no dispersion to chirp against).
ChirpDesign chirp_parameters(double tau_T_fs, double zd_m, double gamma_fs2_per_m);

// q(z) = (1 - 2 z gamma / alpha^2)^2 + 4 z^2 gamma^2 / tau0^4; q(0) = 1,
// and the designed parameters give q(zd) = tau_T^2/tau0^2 with q'(zd) = 0.
double q_broadening(double z_m, const ChirpDesign& c);

// Temporal width W(z) = tau0 sqrt(q(z)) [fs].
double temporal_width(double z_m, const ChirpDesign& c);

// Target profile absorbing the temporal broadening: q(z)^{1/4} F_T(z).
// The result feeds the usual normalization and design pipeline unchanged.
Profile1D pulse_modified_target(const Profile1D& F_T, const ChirpDesign& c);

// |E(0,z,t)| intensity mesh: separable product of the spatial on-axis
// modulus against the modified target and the temporal Gaussian,
//   mesh[iz][it] = ( q^{-1/4} exp(-t^2 / (tau0^2 q)) |E_spatial(0,z)| )^2.
std::vector<std::vector<double>> spatiotemporal_on_axis(const std::vector<double>& z_m,
                                                        const std::vector<double>& spatial_abs,
                                                        const std::vector<double>& t_fs,
                                                        const ChirpDesign& c);

}  // namespace ringshaper
