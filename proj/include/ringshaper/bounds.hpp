#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ringshaper/grids.hpp"

namespace ringshaper {

using Profile1D = std::function<double(double)>;

// L1/L2 norms of g(s) = E0 f(sqrt(s)) and G(Omega) = ET F_T(k/2Omega)/Omega,
// evaluated as r-space / z-space quadratures over the truncated supports:
//   ||g||_1 = 2 E0 int f r dr            ||g||_2^2 = 2 E0^2 int f^2 r dr
//   ||G||_1 = ET int F_T / z dz          ||G||_2^2 = (2/k) ET^2 int F_T^2 dz
struct PairNorms {
    double g_l1 = 0.0, g_l2 = 0.0;
    double G_l1 = 0.0, G_l2 = 0.0;
};

PairNorms pair_norms(const Profile1D& f, double E0, double r_lo, double r_hi, const Profile1D& F_T,
                     double ET, double k, double z_lo, double z_hi, int n_quad = 16385);

// ET from the Plancherel normalization ||G|| = sqrt(2 pi) ||g||:
//   ET^2 = 2 pi k (int f^2 r dr) E0^2 / (int F_T^2 dz).
// Throws std::domain_error when the target norm vanishes.
double normalize_target(double E0, const Profile1D& f, double r_lo, double r_hi,
                        const Profile1D& F_T, double z_lo, double z_hi, double k,
                        int n_quad = 16385);

enum class BetaConvention { FullWidth, HalfWidth };

// beta = 2 k r0 WT W0 / (4 zd^2 - WT^2). The half-width convention divides
// both widths by two before applying the formula.
double beta(double k, double r0, double W0, double WT, double zd,
            BetaConvention conv = BetaConvention::FullWidth);

struct PlancherelGap {
    double lower = 0.0;  // | ||G|| - sqrt(2 pi) ||g|| |
    double upper = 0.0;  //   ||G|| + sqrt(2 pi) ||g||
};

PlancherelGap plancherel_gap(double norm_G_l2, double norm_g_l2);

bool normalization_holds(double norm_G_l2, double norm_g_l2, double rel_tol = 1e-6);

// ||G|| (1 - sqrt(beta / pi)), clamped at zero. Requires the normalization
// (throws std::invalid_argument otherwise: it is a precondition of the
// theorem).
double thm2_lower_bound(double norm_G_l2, double norm_g_l2, double beta_value);

struct Thm3Bounds {
    double via_g = 0.0;  // sqrt(2pi)||g||(1 - sqrt(2kWT/(4zd^2-WT^2)) ||g||_1/||g||_2)
    double via_G = 0.0;  // ||G||(1 - sqrt(r0 W0 / pi) ||G||_1/||G||_2)
};

Thm3Bounds thm3_lower_bounds(const PairNorms& n, const DesignParams& p);

struct LocalBound {
    double value = 0.0;
    bool condition_holds = false;  // false => value forced to 0 (bound not applicable)
};

// ||G||_{L2(S_G(zd', WT'))} - sqrt(2 k WT' / (4 zd'^2 - WT'^2)) ||g||_1,
// clamped at zero and gated on the applicability condition
//   (2 k WT' / (4 zd'^2 - WT'^2)) ||g||_1^2 <= ||G||_{L2(local)}^2.
// Throws std::domain_error when the subinterval leaves the global interval.
LocalBound local_lower_bound(const Profile1D& F_T, double ET, const PairNorms& n,
                             const DesignParams& p, double zd_prime, double WT_prime,
                             int n_quad = 4097);

// The companion bound driven by ||G|| instead of ||g||_1. The radicand
// follows the same pattern as the global theorem (2 k WT' r0 W0); the
// printed variant replaces W0 by zd'.
enum class Cor5Radicand { PatternW0, PrintedZdPrime };
LocalBound local_lower_bound_modulus(const Profile1D& F_T, double ET, const PairNorms& n,
                                     const DesignParams& p, double zd_prime, double WT_prime,
                                     Cor5Radicand radicand = Cor5Radicand::PatternW0,
                                     int n_quad = 4097);

struct BestLocalBound {
    double value = 0.0;
    double zd_prime = 0.0;
    double WT_prime = 0.0;
};

// max over an n_zd x n_WT lattice of the admissible set
//   A = { 2zd' - WT' >= 2zd - WT,  2zd' + WT' <= 2zd + WT }.
BestLocalBound best_local_bound(const Profile1D& F_T, double ET, const PairNorms& n,
                                const DesignParams& p, int n_zd = 24, int n_WT = 24);

// Resolution diagnostic for oscillatory targets. With w_m = 2 WT'/m,
//   delta_m = ( int_{S_G(zd, w_m)} G^2 - (2 k w_m/(4 zd^2 - w_m^2)) ||g||_1^2 )
//             / int_{S_G(zd, w_m)} G^2.
// delta_m > 0 flags oscillations no phase can match. l1_exponent = 1 selects
// the unsquared variant for the convention cross-check.
double delta_m(const Profile1D& F_T, double ET, const PairNorms& n, const DesignParams& p,
               int m, double WT_prime, int l1_exponent = 2, int n_quad = 8193);

// C(n) = 2^{1/2n - 1} / Gamma(1 + 1/2n); decreasing from ~0.7979 toward 1/2.
double peak_intensity_coefficient(int n);

// ET^2/E0^2 ~ sqrt(2) pi^{3/2} C(n) k r0 W0' / WT' for the Gaussian-ring /
// super-Gaussian pair (Laplace-method closed form).
double peak_intensity_ratio(int n, double k, double r0, double W0_prime, double WT_prime);

struct CentralCorePower {
    double printed = 0.0;    // 9.8 * 2^{-1/2n} / Gamma(1+1/2n) * zd^2/(k r0^2 WT') * P0
    double corrected = 0.0;  // exponent +1/2n, following the derivation chain
    bool advisory = false;   // set when beta is not >> pi (estimate unreliable)
};

CentralCorePower central_core_power(const DesignParams& p, int n, double WT_prime, double P0,
                                    double beta_value);

// Everything the scenario runner persists.
struct BoundsReport {
    double beta_full = 0.0, beta_half = 0.0;
    double norm_g_l1 = 0.0, norm_g_l2 = 0.0, norm_G_l1 = 0.0, norm_G_l2 = 0.0;
    PlancherelGap plancherel;
    bool normalized = false;
    double thm2_lower = 0.0;
    double thm3_lower_g = 0.0, thm3_lower_G = 0.0;
    BestLocalBound best_local;

    // Largest valid lower bound on inf I.
    double master() const;
};

BoundsReport make_bounds_report(const Profile1D& f, const Profile1D& F_T, const DesignParams& p,
                                BetaConvention thm2_convention = BetaConvention::FullWidth);

}  // namespace ringshaper
