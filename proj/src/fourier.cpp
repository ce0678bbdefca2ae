#include "ringshaper/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringshaper {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

Fft::Fft(int n) : n_(n) {
    if (n < 1 || (n & (n - 1)) != 0) throw std::invalid_argument("Fft: size must be a power of two");
    twiddle_.resize(std::max(1, n / 2));
    for (int t = 0; t < n / 2; ++t) twiddle_[t] = std::polar(1.0, kTwoPi * t / n);
    reversed_.resize(n);
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < bits; ++b)
            if (i & (1 << b)) r |= 1 << (bits - 1 - b);
        reversed_[i] = r;
    }
}

void Fft::transform(std::vector<cplx>& a, int sign) const {
    if ((int)a.size() != n_) throw std::invalid_argument("Fft: buffer size mismatch");
    for (int i = 0; i < n_; ++i) {
        const int r = reversed_[i];
        if (i < r) std::swap(a[i], a[r]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
        const int stride = n_ / len;
        for (int block = 0; block < n_; block += len) {
            for (int t = 0; t < len / 2; ++t) {
                cplx w = twiddle_[t * stride];
                if (sign < 0) w = std::conj(w);
                const cplx u = a[block + t];
                const cplx v = a[block + t + len / 2] * w;
                a[block + t] = u + v;
                a[block + t + len / 2] = u - v;
            }
        }
    }
}

std::vector<cplx> chirp_transform(const std::vector<cplx>& x, double s0, double ds,
                                  double omega0, double domega, int n_omega) {
    const int n = (int)x.size();
    const int m = n_omega;
    const int p = next_pow2(n + m - 1);
    const double a = domega * ds;  // fractional stride, need not divide 2 pi

    // jm = (j^2 + m^2 - (j-m)^2) / 2 turns the sum into a convolution.
    Fft fft(p);
    std::vector<cplx> u(p, cplx{0.0, 0.0}), v(p, cplx{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        const double si = s0 + i * ds;
        u[i] = x[i] * std::polar(1.0, omega0 * si + 0.5 * a * double(i) * double(i));
    }
    // Kernel exp(-i a l^2 / 2) for lags l = j - i in [-(n-1), m-1], wrapped.
    for (int l = -(n - 1); l <= m - 1; ++l) {
        const int idx = (l % p + p) % p;
        v[idx] = std::polar(1.0, -0.5 * a * double(l) * double(l));
    }
    fft.transform(u, +1);
    fft.transform(v, +1);
    for (int i = 0; i < p; ++i) u[i] *= v[i];
    fft.transform(u, -1);

    std::vector<cplx> out(m);
    for (int j = 0; j < m; ++j) {
        const cplx conv = u[j] / double(p);
        out[j] = conv * std::polar(1.0, j * domega * s0 + 0.5 * a * double(j) * double(j));
    }
    return out;
}

std::vector<cplx> chirp_transform_direct(const std::vector<cplx>& x, double s0, double ds,
                                         double omega0, double domega, int n_omega) {
    std::vector<cplx> out(n_omega);
    for (int j = 0; j < n_omega; ++j) {
        const double w = omega0 + j * domega;
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::polar(1.0, w * (s0 + i * ds));
        out[j] = acc;
    }
    return out;
}

FourierFrame::FourierFrame(double s_lo, double ds, int ns, int nfft, double omega_lo)
    : s_lo_(s_lo), ds_(ds), ns_(ns), nfft_(nfft), omega_lo_(omega_lo),
      domega_(kTwoPi / (nfft * ds)), fft_(nfft) {
    mod_fwd_.resize(ns_);
    for (int m = 0; m < ns_; ++m) mod_fwd_[m] = std::polar(1.0, omega_lo_ * s(m));
    post_fwd_.resize(nfft_);
    for (int j = 0; j < nfft_; ++j)
        post_fwd_[j] = ds_ * std::polar(1.0, j * domega_ * s_lo_ + std::numbers::pi * j / nfft_);
}

FourierFrame FourierFrame::build(const SGrid& s, const OmegaGrid& target, const Options& opt) {
    const double L = s.s_max - s.s_min;
    const double tw = target.width();
    const double window_req =
        std::max(opt.window_factor * tw, tw + 2.0 * opt.bandwidth_cycles * kTwoPi / L);

    int ns = std::max(opt.min_object_samples, (int)std::ceil(L * window_req / kTwoPi));
    if (ns > s.n) ns = s.n;
    const double ds = L / ns;
    const double window = kTwoPi / ds;

    const double domega_req = tw / opt.min_bins_over_target;
    const int nfft = next_pow2(std::max(4 * ns, (int)std::ceil(window / domega_req)));

    const double domega = kTwoPi / (nfft * ds);
    const double omega_lo = target.center() - 0.5 * nfft * domega;

    FourierFrame f(s.s_min, ds, ns, nfft, omega_lo);
    // Bins falling inside the target interval (G support).
    f.target_lo_ = (int)std::ceil((target.omega_min - omega_lo) / domega);
    f.target_hi_ = (int)std::floor((target.omega_max - omega_lo) / domega);
    if (f.target_lo_ < 0 || f.target_hi_ >= nfft)
        throw std::logic_error("FourierFrame: target interval exceeds the window");
    return f;
}

std::vector<double> FourierFrame::s_nodes() const {
    std::vector<double> x(ns_);
    for (int m = 0; m < ns_; ++m) x[m] = s(m);
    return x;
}

std::vector<cplx> FourierFrame::forward(const std::vector<cplx>& object) const {
    if ((int)object.size() != ns_) throw std::invalid_argument("FourierFrame::forward: size mismatch");
    std::vector<cplx> buf(nfft_, cplx{0.0, 0.0});
    for (int m = 0; m < ns_; ++m) buf[m] = object[m] * mod_fwd_[m];
    fft_.transform(buf, +1);
    for (int j = 0; j < nfft_; ++j) buf[j] *= post_fwd_[j];
    return buf;
}

std::vector<cplx> FourierFrame::inverse(const std::vector<cplx>& spectrum) const {
    if ((int)spectrum.size() != nfft_) throw std::invalid_argument("FourierFrame::inverse: size mismatch");
    // conj(post_fwd) = ds * exp(-i j domega s_lo - i pi j / nfft); the extra
    // ds is divided back out so buf carries the bare phase factor.
    std::vector<cplx> buf(nfft_);
    for (int j = 0; j < nfft_; ++j) buf[j] = spectrum[j] * std::conj(post_fwd_[j]) / ds_;
    fft_.transform(buf, -1);
    const double scale = domega_ / kTwoPi;
    std::vector<cplx> out(ns_);
    for (int m = 0; m < ns_; ++m) out[m] = buf[m] * std::conj(mod_fwd_[m]) * scale;
    return out;
}

double FourierFrame::object_norm(const std::vector<cplx>& object) const {
    double acc = 0.0;
    for (const cplx& v : object) acc += std::norm(v);
    return std::sqrt(ds_ * acc);
}

double FourierFrame::object_norm(const std::vector<double>& object) const {
    double acc = 0.0;
    for (double v : object) acc += v * v;
    return std::sqrt(ds_ * acc);
}

double FourierFrame::spectral_norm(const std::vector<cplx>& spectrum) const {
    double acc = 0.0;
    for (const cplx& v : spectrum) acc += std::norm(v);
    return std::sqrt(domega_ * acc);
}

double FourierFrame::edge_mass_fraction(const std::vector<cplx>& spectrum,
                                        double edge_fraction) const {
    const int edge = std::max(1, (int)(edge_fraction * nfft_));
    double total = 0.0, outer = 0.0;
    for (int j = 0; j < nfft_; ++j) {
        const double p = std::norm(spectrum[j]);
        total += p;
        if (j < edge || j >= nfft_ - edge) outer += p;
    }
    return total > 0.0 ? outer / total : 0.0;
}

}  // namespace ringshaper
