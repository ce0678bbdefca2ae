#include "ringshaper/caustic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringshaper/bessel.hpp"

namespace ringshaper {

namespace {

// Monotone cubic Hermite evaluation on a uniform node grid. Slopes are
// limited Fritsch-Carlson style, which for our smooth monotone maps only
// ever activates at the support edges.
double hermite_eval(const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<double>& d, double xi, bool derivative) {
    const int n = (int)x.size();
    if (xi <= x.front()) xi = x.front();
    if (xi >= x.back()) xi = x.back();
    const double h = x[1] - x[0];
    int i = std::min((int)((xi - x.front()) / h), n - 2);
    const double t = (xi - x[i]) / h;

    const double delta = (y[i + 1] - y[i]) / h;
    auto limit = [&](double s) {
        if (delta == 0.0) return 0.0;
        if (s * delta < 0.0) return 0.0;
        return std::fabs(s) > 3.0 * std::fabs(delta) ? 3.0 * delta : s;
    };
    const double d0 = limit(d[i]);
    const double d1 = limit(d[i + 1]);

    if (!derivative) {
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        const double h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t);
        const double h11 = t * t * (t - 1);
        return h00 * y[i] + h10 * h * d0 + h01 * y[i + 1] + h11 * h * d1;
    }
    const double g00 = 6 * t * t - 6 * t;
    const double g10 = 3 * t * t - 4 * t + 1;
    const double g01 = -6 * t * t + 6 * t;
    const double g11 = 3 * t * t - 2 * t;
    return (g00 * y[i] + g01 * y[i + 1]) / h + g10 * d0 + g11 * d1;
}

}  // namespace

double CausticMap::endpoint_error() const { return std::fabs(z.back() - z_hi) / z_hi; }

double CausticMap::z_at(double rhobar) const { return hermite_eval(rho, z, dz, rhobar, false); }

double CausticMap::dz_at(double rhobar) const { return hermite_eval(rho, z, dz, rhobar, true); }

double CausticMap::rho_at(double zbar) const {
    if (zbar <= z.front()) return rho.front();
    if (zbar >= z.back()) return rho.back();
    // bracket by bisection on the monotone nodes, then refine on the segment
    int lo = 0, hi = (int)z.size() - 1;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (z[mid] <= zbar ? lo : hi) = mid;
    }
    double a = rho[lo], b = rho[hi];
    double x = 0.5 * (a + b);
    for (int it = 0; it < 100; ++it) {
        const double f = z_at(x) - zbar;
        if (f > 0.0) b = x; else a = x;
        const double df = dz_at(x);
        double step = df > 0.0 ? f / df : 0.0;
        double xn = x - step;
        if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
        if (std::fabs(xn - x) < 1e-15 * std::max(1.0, std::fabs(x))) return xn;
        x = xn;
    }
    return x;
}

CausticMap solve_caustic_map(const Profile1D& f, const Profile1D& F_T, const DesignParams& p,
                             int n_steps) {
    if (n_steps < 2) throw std::invalid_argument("solve_caustic_map: n_steps must be >= 2");
    if (!(p.ET > 0.0)) throw std::invalid_argument("solve_caustic_map: ET must be normalized first");

    CausticMap m;
    m.kbar = p.r0 * p.r0 * p.k / p.zd;
    m.rho_lo = 1.0 - 0.5 * p.W0 / p.r0;
    m.rho_hi = 1.0 + 0.5 * p.W0 / p.r0;
    m.z_lo = 1.0 - 0.5 * p.WT / p.zd;
    m.z_hi = 1.0 + 0.5 * p.WT / p.zd;

    const double amp = 2.0 * std::numbers::pi * m.kbar * p.E0 * p.E0 / (p.ET * p.ET);
    const double floor_sq = 1e-12;  // F_T peaks at 1 by construction
    bool stiff = false;
    auto rhs = [&](double rhobar, double zbar) {
        const double fv = f(p.r0 * rhobar);
        double Ft = F_T(p.zd * zbar);
        double Ft_sq = Ft * Ft;
        if (Ft_sq < floor_sq) {
            Ft_sq = floor_sq;
            if (rhobar > m.rho_lo + 1e-9 && rhobar < m.rho_hi - 1e-9) stiff = true;
        }
        return amp * fv * fv / Ft_sq * rhobar;
    };

    const double h = (m.rho_hi - m.rho_lo) / n_steps;
    m.rho.resize(n_steps + 1);
    m.z.resize(n_steps + 1);
    m.dz.resize(n_steps + 1);
    m.rho[0] = m.rho_lo;
    m.z[0] = m.z_lo;
    for (int i = 0; i < n_steps; ++i) {
        const double x = m.rho_lo + i * h;
        const double y = m.z[i];
        const double k1 = rhs(x, y);
        const double k2 = rhs(x + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = rhs(x + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = rhs(x + h, y + h * k3);
        m.rho[i + 1] = m.rho_lo + (i + 1) * h;
        m.z[i + 1] = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        m.dz[i] = k1;
    }
    m.dz[n_steps] = rhs(m.rho_hi, m.z[n_steps]);
    m.stiff_region_warning = stiff;
    return m;
}

PhaseFunction integrate_phase(const CausticMap& map, const DesignParams& p) {
    PhaseFunction ph;
    ph.rho = map.rho;
    ph.scale = p.k * p.r0 * p.r0 / p.zd;
    ph.r0 = p.r0;
    const int n = (int)map.rho.size();
    ph.phibar.resize(n);
    ph.dphibar.resize(n);
    for (int i = 0; i < n; ++i) ph.dphibar[i] = -map.rho[i] / map.z[i];
    ph.phibar[0] = 0.0;
    const double h = map.rho[1] - map.rho[0];
    for (int i = 0; i + 1 < n; ++i) {
        const double mid = 0.5 * (map.rho[i] + map.rho[i + 1]);
        const double gmid = -mid / map.z_at(mid);
        ph.phibar[i + 1] =
            ph.phibar[i] + h / 6.0 * (ph.dphibar[i] + 4.0 * gmid + ph.dphibar[i + 1]);
    }
    return ph;
}

double PhaseFunction::phibar_at(double rhobar) const {
    return hermite_eval(rho, phibar, dphibar, rhobar, false);
}

double PhaseFunction::phi_at_s(double s) const { return phi_at_r(std::sqrt(s)); }

std::vector<double> on_axis_asymptotic(const CausticMap& map, const Profile1D& f,
                                       const DesignParams& p, const std::vector<double>& z) {
    std::vector<double> out(z.size(), 0.0);
    const double pref = p.E0 * std::sqrt(2.0 * std::numbers::pi * map.kbar);
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double zbar = z[i] / p.zd;
        if (zbar < map.z_lo || zbar > map.z_hi) continue;
        const double rc = map.rho_at(zbar);
        const double slope = map.dz_at(rc);
        if (!(slope > 0.0)) continue;
        out[i] = pref * f(p.r0 * rc) * std::sqrt(rc) / std::sqrt(slope);
    }
    return out;
}

OffAxisAsymptotic off_axis_asymptotic(const CausticMap& map, const Profile1D& F_T,
                                      const DesignParams& p, double r, double z) {
    OffAxisAsymptotic out;
    const double zbar = z / p.zd;
    const double rc = map.rho_at(std::clamp(zbar, map.z_lo, map.z_hi));
    const double arg = map.kbar * r * rc / (2.0 * zbar * p.r0);
    out.value = p.ET * F_T(z) * bessel_j0(arg);
    const double lobe_scale = 2.0 * zbar * p.r0 / (map.kbar * rc);
    out.validity_advisory = std::fabs(z - p.zd) > 0.5 * p.WT || r > 4.0 * lobe_scale;
    return out;
}

}  // namespace ringshaper
