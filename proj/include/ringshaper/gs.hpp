#pragma once

#include <vector>

#include "ringshaper/fourier.hpp"

namespace ringshaper {

// Per-iteration record of the alternating-projection refinement.
// I is monotone nonincreasing up to roundoff; Psi_target keeps the
// Fourier-side phase restricted to the target bins (the rest of the window
// carries no target modulus).
struct GsTrace {
    std::vector<std::vector<double>> phi;         // iterates, phi[0] = initial guess
    std::vector<double> I;                        // functional values, size iters+1
    std::vector<std::vector<double>> Psi_target;  // size iters
    int stagnation_iter = -1;  // first n with relative decrease < 1e-9 over 10 steps
};

// One alternating projection:
//   Psi = arg F[g e^{i phi_prev}],   phi_next = arg F^{-1}[G_ext e^{i Psi}],
// with arg 0 at transform zeros and phi carried over from phi_prev wherever
// g vanishes or the inverse transform is zero.
struct GsStep {
    std::vector<double> phi;
    std::vector<double> Psi;  // full window bins
};

GsStep gs_step(const std::vector<double>& phi_prev, const std::vector<double>& g,
               const std::vector<double>& G_ext, const FourierFrame& frame);

GsTrace run_gs(const std::vector<double>& phi0, const std::vector<double>& g,
               const std::vector<double>& G_ext, const FourierFrame& frame, int iters);

// phi_zd = phi - k s / (2 zd): the residual beyond an ideal lens focused at
// zd, unwrapped along the grid. s_nodes are the squared-radius samples the
// phase lives on.
std::vector<double> lens_decompose(const std::vector<double>& phi,
                                   const std::vector<double>& s_nodes, double k, double zd);

}  // namespace ringshaper
