#include "ringshaper/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringshaper/utils.hpp"

namespace ringshaper {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

// int_{zd' - WT'/2}^{zd' + WT'/2} G^2 dOmega = (2/k) ET^2 int F_T^2 dz
double local_G_sq(const Profile1D& F_T, double ET, double k, double zd_prime, double WT_prime,
                  int n_quad) {
    const double I = integrate_trapezoid([&](double z) { const double v = F_T(z); return v * v; },
                                         zd_prime - 0.5 * WT_prime, zd_prime + 0.5 * WT_prime,
                                         n_quad);
    return 2.0 / k * ET * ET * I;
}

void check_subinterval(const DesignParams& p, double zd_prime, double WT_prime) {
    if (!(WT_prime > 0.0)) throw std::domain_error("local bound: WT' must be positive");
    if (2.0 * zd_prime - WT_prime < 2.0 * p.zd - p.WT - 1e-12 * p.zd ||
        2.0 * zd_prime + WT_prime > 2.0 * p.zd + p.WT + 1e-12 * p.zd)
        throw std::domain_error("local bound: subinterval outside the global target interval");
}

}  // namespace

PairNorms pair_norms(const Profile1D& f, double E0, double r_lo, double r_hi, const Profile1D& F_T,
                     double ET, double k, double z_lo, double z_hi, int n_quad) {
    PairNorms n;
    n.g_l1 = 2.0 * E0 * integrate_trapezoid([&](double r) { return f(r) * r; }, r_lo, r_hi, n_quad);
    n.g_l2 = std::sqrt(2.0 * E0 * E0 *
                       integrate_trapezoid([&](double r) { const double v = f(r); return v * v * r; },
                                           r_lo, r_hi, n_quad));
    n.G_l1 = ET * integrate_trapezoid([&](double z) { return F_T(z) / z; }, z_lo, z_hi, n_quad);
    n.G_l2 = std::sqrt(2.0 / k * ET * ET *
                       integrate_trapezoid([&](double z) { const double v = F_T(z); return v * v; },
                                           z_lo, z_hi, n_quad));
    return n;
}

double normalize_target(double E0, const Profile1D& f, double r_lo, double r_hi,
                        const Profile1D& F_T, double z_lo, double z_hi, double k, int n_quad) {
    const double num = integrate_trapezoid([&](double r) { const double v = f(r); return v * v * r; },
                                           r_lo, r_hi, n_quad);
    const double den = integrate_trapezoid([&](double z) { const double v = F_T(z); return v * v; },
                                           z_lo, z_hi, n_quad);
    if (!(den > 0.0)) throw std::domain_error("normalize_target: target profile has zero L2 norm");
    return E0 * std::sqrt(2.0 * std::numbers::pi * k * num / den);
}

double beta(double k, double r0, double W0, double WT, double zd, BetaConvention conv) {
    double w0 = W0, wt = WT;
    if (conv == BetaConvention::HalfWidth) {
        w0 *= 0.5;
        wt *= 0.5;
    }
    if (!(wt < 2.0 * zd)) throw std::domain_error("beta: requires WT < 2 zd");
    return 2.0 * k * r0 * wt * w0 / (4.0 * zd * zd - wt * wt);
}

PlancherelGap plancherel_gap(double norm_G_l2, double norm_g_l2) {
    return {std::fabs(norm_G_l2 - kSqrt2Pi * norm_g_l2), norm_G_l2 + kSqrt2Pi * norm_g_l2};
}

bool normalization_holds(double norm_G_l2, double norm_g_l2, double rel_tol) {
    if (norm_G_l2 <= 0.0) return false;
    return std::fabs(norm_G_l2 - kSqrt2Pi * norm_g_l2) <= rel_tol * norm_G_l2;
}

double thm2_lower_bound(double norm_G_l2, double norm_g_l2, double beta_value) {
    if (!normalization_holds(norm_G_l2, norm_g_l2))
        throw std::invalid_argument("thm2_lower_bound: ||G|| = sqrt(2 pi) ||g|| must hold");
    return std::max(0.0, norm_G_l2 * (1.0 - std::sqrt(beta_value / std::numbers::pi)));
}

Thm3Bounds thm3_lower_bounds(const PairNorms& n, const DesignParams& p) {
    if (!normalization_holds(n.G_l2, n.g_l2))
        throw std::invalid_argument("thm3_lower_bounds: ||G|| = sqrt(2 pi) ||g|| must hold");
    Thm3Bounds b;
    const double width_factor = std::sqrt(2.0 * p.k * p.WT / (4.0 * p.zd * p.zd - p.WT * p.WT));
    b.via_g = std::max(0.0, kSqrt2Pi * n.g_l2 * (1.0 - width_factor * n.g_l1 / n.g_l2));
    const double support_factor = std::sqrt(p.r0 * p.W0 / std::numbers::pi);
    b.via_G = std::max(0.0, n.G_l2 * (1.0 - support_factor * n.G_l1 / n.G_l2));
    return b;
}

LocalBound local_lower_bound(const Profile1D& F_T, double ET, const PairNorms& n,
                             const DesignParams& p, double zd_prime, double WT_prime, int n_quad) {
    check_subinterval(p, zd_prime, WT_prime);
    const double Gloc_sq = local_G_sq(F_T, ET, p.k, zd_prime, WT_prime, n_quad);
    const double measure = 2.0 * p.k * WT_prime / (4.0 * zd_prime * zd_prime - WT_prime * WT_prime);
    LocalBound b;
    b.condition_holds = measure * n.g_l1 * n.g_l1 <= Gloc_sq;
    if (!b.condition_holds) return b;
    b.value = std::max(0.0, std::sqrt(Gloc_sq) - std::sqrt(measure) * n.g_l1);
    return b;
}

LocalBound local_lower_bound_modulus(const Profile1D& F_T, double ET, const PairNorms& n,
                                     const DesignParams& p, double zd_prime, double WT_prime,
                                     Cor5Radicand radicand, int n_quad) {
    check_subinterval(p, zd_prime, WT_prime);
    const double Gloc_sq = local_G_sq(F_T, ET, p.k, zd_prime, WT_prime, n_quad);
    const double span = radicand == Cor5Radicand::PatternW0 ? p.W0 : zd_prime;
    const double denom = 4.0 * zd_prime * zd_prime - WT_prime * WT_prime;
    LocalBound b;
    b.condition_holds =
        (2.0 * p.k * WT_prime * p.W0 * p.r0 / denom) * (n.G_l2 * n.G_l2 / Gloc_sq) < std::numbers::pi;
    if (!b.condition_holds) return b;
    const double sub = std::sqrt(2.0 * p.k * WT_prime * p.r0 * span / denom / std::numbers::pi);
    b.value = std::max(0.0, std::sqrt(Gloc_sq) - sub * n.G_l2);
    return b;
}

BestLocalBound best_local_bound(const Profile1D& F_T, double ET, const PairNorms& n,
                                const DesignParams& p, int n_zd, int n_WT) {
    BestLocalBound best;
    for (int iw = 1; iw <= n_WT; ++iw) {
        const double WT_prime = p.WT * iw / n_WT;
        // admissible zd' range for this width
        const double lo = (2.0 * p.zd - p.WT + WT_prime) / 2.0;
        const double hi = (2.0 * p.zd + p.WT - WT_prime) / 2.0;
        for (int iz = 0; iz < n_zd; ++iz) {
            const double zd_prime = n_zd == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * iz / (n_zd - 1);
            const LocalBound b = local_lower_bound(F_T, ET, n, p, zd_prime, WT_prime, 1025);
            if (b.condition_holds && b.value > best.value) {
                best.value = b.value;
                best.zd_prime = zd_prime;
                best.WT_prime = WT_prime;
            }
        }
    }
    return best;
}

double delta_m(const Profile1D& F_T, double ET, const PairNorms& n, const DesignParams& p, int m,
               double WT_prime, int l1_exponent, int n_quad) {
    const double w_m = 2.0 * WT_prime / m;
    if (!(w_m > 0.0) || w_m >= p.WT)
        throw std::domain_error("delta_m: requires 0 < w_m < WT");
    const double Gloc_sq = local_G_sq(F_T, ET, p.k, p.zd, w_m, n_quad);
    const double measure = 2.0 * p.k * w_m / (4.0 * p.zd * p.zd - w_m * w_m);
    const double l1 = l1_exponent == 2 ? n.g_l1 * n.g_l1 : n.g_l1;
    return (Gloc_sq - measure * l1) / Gloc_sq;
}

double peak_intensity_coefficient(int n) {
    const double inv2n = 1.0 / (2.0 * n);
    return std::pow(2.0, inv2n - 1.0) / std::tgamma(1.0 + inv2n);
}

double peak_intensity_ratio(int n, double k, double r0, double W0_prime, double WT_prime) {
    return std::sqrt(2.0) * std::pow(std::numbers::pi, 1.5) * peak_intensity_coefficient(n) * k *
           r0 * W0_prime / WT_prime;
}

CentralCorePower central_core_power(const DesignParams& p, int n, double WT_prime, double P0,
                                    double beta_value) {
    const double inv2n = 1.0 / (2.0 * n);
    const double base = 9.8 / std::tgamma(1.0 + inv2n) * p.zd * p.zd /
                        (p.k * p.r0 * p.r0 * WT_prime) * P0;
    CentralCorePower c;
    c.printed = base * std::pow(2.0, -inv2n);
    c.corrected = base * std::pow(2.0, inv2n);
    c.advisory = !(beta_value > 10.0 * std::numbers::pi);
    return c;
}

double BoundsReport::master() const {
    double m = plancherel.lower;
    m = std::max(m, thm2_lower);
    m = std::max(m, thm3_lower_g);
    m = std::max(m, thm3_lower_G);
    m = std::max(m, best_local.value);
    return m;
}

BoundsReport make_bounds_report(const Profile1D& f, const Profile1D& F_T, const DesignParams& p,
                                BetaConvention thm2_convention) {
    BoundsReport r;
    r.beta_full = beta(p.k, p.r0, p.W0, p.WT, p.zd, BetaConvention::FullWidth);
    r.beta_half = beta(p.k, p.r0, p.W0, p.WT, p.zd, BetaConvention::HalfWidth);

    const double r_lo = p.r0 - 0.5 * p.W0, r_hi = p.r0 + 0.5 * p.W0;
    const double z_lo = p.zd - 0.5 * p.WT, z_hi = p.zd + 0.5 * p.WT;
    const PairNorms n = pair_norms(f, p.E0, r_lo, r_hi, F_T, p.ET, p.k, z_lo, z_hi);
    r.norm_g_l1 = n.g_l1;
    r.norm_g_l2 = n.g_l2;
    r.norm_G_l1 = n.G_l1;
    r.norm_G_l2 = n.G_l2;
    r.plancherel = plancherel_gap(n.G_l2, n.g_l2);
    r.normalized = normalization_holds(n.G_l2, n.g_l2);

    const double b = thm2_convention == BetaConvention::FullWidth ? r.beta_full : r.beta_half;
    if (r.normalized) {
        r.thm2_lower = thm2_lower_bound(n.G_l2, n.g_l2, b);
        const Thm3Bounds t3 = thm3_lower_bounds(n, p);
        r.thm3_lower_g = t3.via_g;
        r.thm3_lower_G = t3.via_G;
        r.best_local = best_local_bound(F_T, p.ET, n, p);
    }
    return r;
}

}  // namespace ringshaper
