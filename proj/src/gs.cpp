#include "ringshaper/gs.hpp"

#include <cmath>
#include <stdexcept>

#include "ringshaper/spectral.hpp"
#include "ringshaper/utils.hpp"

namespace ringshaper {

GsStep gs_step(const std::vector<double>& phi_prev, const std::vector<double>& g,
               const std::vector<double>& G_ext, const FourierFrame& frame) {
    const int ns = frame.object_size();
    const int nf = frame.spectrum_size();
    if ((int)phi_prev.size() != ns || (int)g.size() != ns || (int)G_ext.size() != nf)
        throw std::invalid_argument("gs_step: size mismatch with the frame");

    std::vector<cplx> x(ns);
    for (int m = 0; m < ns; ++m) x[m] = std::polar(g[m], phi_prev[m]);
    const auto F = frame.forward(x);

    GsStep out;
    out.Psi.resize(nf);
    std::vector<cplx> H(nf);
    for (int j = 0; j < nf; ++j) {
        out.Psi[j] = std::arg(F[j]);  // arg(0) == 0 by convention
        H[j] = std::polar(G_ext[j], out.Psi[j]);
    }
    const auto h = frame.inverse(H);

    out.phi.resize(ns);
    for (int m = 0; m < ns; ++m) {
        if (g[m] == 0.0 || (h[m].real() == 0.0 && h[m].imag() == 0.0))
            out.phi[m] = phi_prev[m];
        else
            out.phi[m] = std::arg(h[m]);
    }
    return out;
}

GsTrace run_gs(const std::vector<double>& phi0, const std::vector<double>& g,
               const std::vector<double>& G_ext, const FourierFrame& frame, int iters) {
    if (iters < 1) throw std::invalid_argument("run_gs: iters must be >= 1");
    GsTrace trace;
    trace.phi.reserve(iters + 1);
    trace.I.reserve(iters + 1);
    trace.Psi_target.reserve(iters);

    trace.phi.push_back(phi0);
    trace.I.push_back(error_functional(frame, G_ext, g, phi0));

    const int t_lo = frame.target_bin_lo(), t_hi = frame.target_bin_hi();
    for (int n = 1; n <= iters; ++n) {
        GsStep step = gs_step(trace.phi.back(), g, G_ext, frame);
        trace.Psi_target.emplace_back(step.Psi.begin() + t_lo, step.Psi.begin() + t_hi + 1);
        trace.phi.push_back(std::move(step.phi));
        trace.I.push_back(error_functional(frame, G_ext, g, trace.phi.back()));

        if (trace.stagnation_iter < 0 && n >= 10) {
            const double ref = trace.I[n - 10];
            if (ref <= 0.0 || (ref - trace.I[n]) < 1e-9 * ref) trace.stagnation_iter = n;
        }
    }
    return trace;
}

std::vector<double> lens_decompose(const std::vector<double>& phi,
                                   const std::vector<double>& s_nodes, double k, double zd) {
    if (phi.size() != s_nodes.size()) throw std::invalid_argument("lens_decompose: size mismatch");
    std::vector<double> resid(phi.size());
    for (std::size_t m = 0; m < phi.size(); ++m) resid[m] = phi[m] - k * s_nodes[m] / (2.0 * zd);
    return unwrap_phase(resid);
}

}  // namespace ringshaper
