#pragma once

#include <complex>
#include <vector>

#include "ringshaper/grids.hpp"

namespace ringshaper {

using cplx = std::complex<double>;

int next_pow2(int n);

// Radix-2 FFT with precomputed twiddles and bit-reversal table. sign = +1
// uses the exp(+i 2 pi j m / n) kernel, sign = -1 its conjugate. Unscaled.
class Fft {
public:
    explicit Fft(int n);
    int size() const { return n_; }
    void transform(std::vector<cplx>& a, int sign) const;

private:
    int n_;
    std::vector<cplx> twiddle_;  // exp(+i 2 pi t / n), t < n/2
    std::vector<int> reversed_;
};

// Chirp-factored (Bluestein) evaluation of
//   F_j = sum_m x_m exp(i (omega0 + j domega) s_m),   s_m = s0 + m ds,
// for j = 0..n_omega-1 on an arbitrary uniform Omega grid. Exact
// factorization of the direct sum; quadrature weights are the caller's.
std::vector<cplx> chirp_transform(const std::vector<cplx>& x, double s0, double ds,
                                  double omega0, double domega, int n_omega);

// Direct O(N^2) evaluation of the same sum; the always-available oracle.
std::vector<cplx> chirp_transform_direct(const std::vector<cplx>& x, double s0, double ds,
                                         double omega0, double domega, int n_omega);

// A conjugate discrete transform pair between a midpoint s-grid covering the
// object support and a uniform Omega window centered on the target interval.
//
// The window is one full alias period wide (2 pi / ds >= 4x the target
// interval by construction), and forward/inverse satisfy discrete Parseval
// exactly:
//   domega * sum_j |F_j|^2 = 2 pi * ds * sum_m |x_m|^2.
// Every functional value and Gerchberg-Saxton step in this project is
// evaluated through one frame so that error reduction holds to roundoff.
class FourierFrame {
public:
    struct Options {
        double window_factor = 4.0;   // window >= factor * target width
        int min_bins_over_target = 64;
        int min_object_samples = 64;
        double bandwidth_cycles = 24.0;  // spectral margin for the object shape
    };

    static FourierFrame build(const SGrid& s, const OmegaGrid& target, const Options& opt);
    static FourierFrame build(const SGrid& s, const OmegaGrid& target) {
        return build(s, target, Options{});
    }

    int object_size() const { return ns_; }
    int spectrum_size() const { return nfft_; }
    double ds() const { return ds_; }
    double s(int m) const { return s_lo_ + (m + 0.5) * ds_; }
    std::vector<double> s_nodes() const;
    double domega() const { return domega_; }
    double omega(int j) const { return omega_lo_ + j * domega_; }
    double omega_center() const { return omega_lo_ + 0.5 * nfft_ * domega_; }
    double window_width() const { return nfft_ * domega_; }
    int target_bin_lo() const { return target_lo_; }
    int target_bin_hi() const { return target_hi_; }  // inclusive

    // F_j = ds * sum_m x_m exp(i Omega_j s_m), j = 0..nfft-1.
    std::vector<cplx> forward(const std::vector<cplx>& object) const;
    // x_m = (domega / 2 pi) * sum_j F_j exp(-i Omega_j s_m), m = 0..ns-1.
    // Exact inverse of forward on the object side.
    std::vector<cplx> inverse(const std::vector<cplx>& spectrum) const;

    double object_norm(const std::vector<cplx>& object) const;     // L2, ds weights
    double object_norm(const std::vector<double>& object) const;
    double spectral_norm(const std::vector<cplx>& spectrum) const; // L2, domega weights

    // Fraction of |F|^2 in the outer `edge_fraction` of the window on each
    // side; large values mean the window clips (aliases) spectral mass.
    double edge_mass_fraction(const std::vector<cplx>& spectrum,
                              double edge_fraction = 0.05) const;

private:
    FourierFrame(double s_lo, double ds, int ns, int nfft, double omega_lo);

    double s_lo_, ds_;
    int ns_, nfft_;
    double omega_lo_, domega_;
    int target_lo_ = 0, target_hi_ = -1;
    Fft fft_;
    std::vector<cplx> mod_fwd_;   // exp(i Omega_0 s_m), m < ns
    std::vector<cplx> post_fwd_;  // ds * exp(i j domega s_lo + i pi j / nfft)
};

}  // namespace ringshaper
