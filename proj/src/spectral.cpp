#include "ringshaper/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringshaper/bessel.hpp"
#include "ringshaper/errors.hpp"
#include "ringshaper/utils.hpp"

namespace ringshaper {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<cplx> weighted_object(const std::vector<double>& g, const std::vector<double>& phi) {
    if (g.size() != phi.size()) throw std::invalid_argument("g and phi size mismatch");
    std::vector<cplx> x(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) x[m] = std::polar(g[m], phi[m]);
    // trapezoid end weights
    if (!x.empty()) {
        x.front() *= 0.5;
        x.back() *= 0.5;
    }
    return x;
}

void flag_captured_mass(ComplexField& out, const std::vector<double>& g, const SGrid& s,
                        double domega) {
    double spec = 0.0;
    for (const cplx& v : out.v) spec += std::norm(v);
    spec *= domega;
    double obj = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
        const double w = (m == 0 || m + 1 == g.size()) ? 0.5 : 1.0;
        obj += w * g[m] * g[m];
    }
    obj *= s.ds() * kTwoPi;
    out.captured_mass_warning = (obj > 0.0) && (spec < 0.9999 * obj);
}

}  // namespace

std::vector<double> ComplexField::abs() const {
    std::vector<double> a(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) a[i] = std::abs(v[i]);
    return a;
}

TargetSpectrum make_target_spectrum(const std::function<double(double)>& F_T_of_z, double ET,
                                    double k, const OmegaGrid& grid) {
    TargetSpectrum t;
    t.grid = grid;
    t.G.resize(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double w = grid.omega(j);
        t.G[j] = ET * F_T_of_z(k / (2.0 * w)) / w;
    }
    return t;
}

std::vector<double> make_target_on_frame(const std::function<double(double)>& F_T_of_z, double ET,
                                         double k, const FourierFrame& frame,
                                         double omega_lo_support, double omega_hi_support) {
    std::vector<double> G(frame.spectrum_size(), 0.0);
    for (int j = 0; j < frame.spectrum_size(); ++j) {
        const double w = frame.omega(j);
        if (w >= omega_lo_support && w <= omega_hi_support)
            G[j] = ET * F_T_of_z(k / (2.0 * w)) / w;
    }
    return G;
}

ComplexField forward_field(const std::vector<double>& g, const std::vector<double>& phi,
                           const SGrid& s, const OmegaGrid& window) {
    auto x = weighted_object(g, phi);
    ComplexField out;
    out.grid = window.nodes();
    out.v = chirp_transform(x, s.s_min, s.ds(), window.omega_min, window.domega(), window.n);
    for (cplx& v : out.v) v *= s.ds();
    flag_captured_mass(out, g, s, window.domega());
    return out;
}

ComplexField forward_field_direct(const std::vector<double>& g, const std::vector<double>& phi,
                                  const SGrid& s, const OmegaGrid& window) {
    auto x = weighted_object(g, phi);
    ComplexField out;
    out.grid = window.nodes();
    out.v = chirp_transform_direct(x, s.s_min, s.ds(), window.omega_min, window.domega(), window.n);
    for (cplx& v : out.v) v *= s.ds();
    flag_captured_mass(out, g, s, window.domega());
    return out;
}

ComplexField on_axis_field(const std::vector<double>& g, const std::vector<double>& phi,
                           const SGrid& s, const std::vector<double>& z, double k) {
    for (double zi : z)
        if (!(zi > 0.0)) throw std::domain_error("on_axis_field: z must be positive");

    std::vector<double> omega(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) omega[i] = omega_of_z(z[i], k);

    bool uniform = omega.size() >= 2;
    const double dw = omega.size() >= 2 ? omega[1] - omega[0] : 0.0;
    for (std::size_t i = 2; i < omega.size() && uniform; ++i)
        if (std::fabs((omega[i] - omega[i - 1]) - dw) > 1e-12 * std::fabs(dw)) uniform = false;

    auto x = weighted_object(g, phi);
    ComplexField out;
    out.grid = z;
    if (uniform) {
        out.v = chirp_transform(x, s.s_min, s.ds(), omega[0], dw, (int)omega.size());
    } else {
        out.v.resize(omega.size());
        for (std::size_t i = 0; i < omega.size(); ++i)
            out.v[i] = chirp_transform_direct(x, s.s_min, s.ds(), omega[i], 1.0, 1)[0];
    }
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] *= cplx{0.0, -1.0} * omega[i] * s.ds();
    return out;
}

std::vector<std::vector<cplx>> off_axis_field(const std::vector<double>& g,
                                              const std::vector<double>& phi, const SGrid& s,
                                              const std::vector<double>& r,
                                              const std::vector<double>& z, double k) {
    for (double zi : z)
        if (!(zi > 0.0)) throw std::domain_error("off_axis_field: z must be positive");
    for (double ri : r)
        if (ri < 0.0) throw std::domain_error("off_axis_field: r must be nonnegative");

    // Oscillation rate in s: |phi'| + Omega + Omega r / sqrt(s).
    double max_dphi = 0.0;
    for (std::size_t m = 1; m < phi.size(); ++m)
        max_dphi = std::max(max_dphi, std::fabs(phi[m] - phi[m - 1]) / s.ds());
    double z_min = z[0], r_max = 0.0;
    for (double zi : z) z_min = std::min(z_min, zi);
    for (double ri : r) r_max = std::max(r_max, ri);
    const double omega_max = k / (2.0 * z_min);
    const double rate = max_dphi + omega_max * (1.0 + r_max / std::sqrt(s.s_min));
    if (rate * s.ds() > kTwoPi / 8.0) {
        const long need = (long)std::ceil((s.s_max - s.s_min) * rate / (kTwoPi / 8.0)) + 1;
        throw ResolutionError("off_axis_field: s-grid cannot resolve the Hankel kernel oscillation",
                              need);
    }

    std::vector<std::vector<cplx>> mesh(z.size(), std::vector<cplx>(r.size()));
    parallel_for((int)z.size(), [&](int iz) {
        const double omega = k / (2.0 * z[iz]);
        for (std::size_t ir = 0; ir < r.size(); ++ir) {
            cplx acc{0.0, 0.0};
            for (int m = 0; m < s.n; ++m) {
                const double w = (m == 0 || m == s.n - 1) ? 0.5 : 1.0;
                const double sm = s.s(m);
                const double j0 = bessel_j0(2.0 * omega * std::sqrt(sm) * r[ir]);
                acc += w * g[m] * j0 * std::polar(1.0, phi[m] + omega * sm);
            }
            acc *= s.ds();
            mesh[iz][ir] = cplx{0.0, -1.0} * omega * std::polar(1.0, omega * r[ir] * r[ir]) * acc;
        }
    });
    return mesh;
}

double error_functional(const FourierFrame& frame, const std::vector<double>& G_ext,
                        const std::vector<double>& g, const std::vector<double>& phi) {
    if ((int)G_ext.size() != frame.spectrum_size())
        throw std::invalid_argument("error_functional: G_ext must live on frame bins");
    std::vector<cplx> x(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) x[m] = std::polar(g[m], phi[m]);
    const auto F = frame.forward(x);
    double acc = 0.0;
    for (int j = 0; j < frame.spectrum_size(); ++j) {
        const double d = G_ext[j] - std::abs(F[j]);
        acc += d * d;
    }
    return std::sqrt(frame.domega() * acc);
}

double local_error(const std::function<double(double)>& F_T_of_z, double ET,
                   const std::vector<double>& g, const std::vector<double>& phi, const SGrid& s,
                   const DesignParams& p, double zd_prime, double WT_prime, int n_quad) {
    if (!(WT_prime > 0.0)) throw std::domain_error("local_error: WT_prime must be positive");
    if (2.0 * zd_prime - WT_prime < 2.0 * p.zd - p.WT ||
        2.0 * zd_prime + WT_prime > 2.0 * p.zd + p.WT)
        throw std::domain_error("local_error: subinterval outside the global target interval");

    OmegaGrid sub{p.k / (2.0 * zd_prime + WT_prime), p.k / (2.0 * zd_prime - WT_prime), n_quad};
    const auto F = forward_field(g, phi, s, sub);
    double acc = 0.0;
    for (int j = 0; j < sub.n; ++j) {
        const double w = (j == 0 || j == sub.n - 1) ? 0.5 : 1.0;
        const double omega = sub.omega(j);
        const double G = ET * F_T_of_z(p.k / (2.0 * omega)) / omega;
        const double d = G - std::abs(F.v[j]);
        acc += w * d * d;
    }
    return std::sqrt(sub.domega() * acc);
}

double power_in_radius(const std::vector<double>& r, const std::vector<cplx>& column, double R) {
    if (r.size() != column.size() || r.size() < 2)
        throw std::invalid_argument("power_in_radius: bad column");
    if (R < r.front() || R > r.back())
        throw std::domain_error("power_in_radius: R exceeds the r-grid");
    auto f = [&](std::size_t i) { return std::norm(column[i]) * r[i]; };
    double acc = 0.0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] <= R) {
            acc += 0.5 * (f(i) + f(i - 1)) * (r[i] - r[i - 1]);
        } else {
            // partial last interval, linear in the integrand
            const double t = (R - r[i - 1]) / (r[i] - r[i - 1]);
            const double fR = f(i - 1) + t * (f(i) - f(i - 1));
            acc += 0.5 * (fR + f(i - 1)) * (R - r[i - 1]);
            break;
        }
    }
    return acc;
}

}  // namespace ringshaper
