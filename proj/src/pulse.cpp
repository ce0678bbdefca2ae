#include "ringshaper/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace ringshaper {

ChirpDesign chirp_parameters(double tau_T_fs, double zd_m, double gamma_fs2_per_m) {
    if (!(tau_T_fs > 0.0) || !(zd_m > 0.0))
        throw std::domain_error("chirp_parameters: tau_T and zd must be positive");
    if (gamma_fs2_per_m == 0.0)
        throw std::domain_error("chirp_parameters: gamma == 0 is degenerate (no dispersion)");
    ChirpDesign c;
    c.gamma = gamma_fs2_per_m;
    c.tau_T = tau_T_fs;
    c.zd = zd_m;
    const double s = tau_T_fs * tau_T_fs * tau_T_fs * tau_T_fs +
                     4.0 * zd_m * zd_m * gamma_fs2_per_m * gamma_fs2_per_m;
    c.alpha = std::sqrt(s / (2.0 * zd_m * std::fabs(gamma_fs2_per_m)));
    c.tau0 = std::sqrt(s) / tau_T_fs;
    return c;
}

double q_broadening(double z_m, const ChirpDesign& c) {
    const double a = 1.0 - 2.0 * z_m * c.gamma / (c.alpha * c.alpha);
    const double b = 2.0 * z_m * c.gamma / (c.tau0 * c.tau0);
    return a * a + b * b;
}

double temporal_width(double z_m, const ChirpDesign& c) {
    return c.tau0 * std::sqrt(q_broadening(z_m, c));
}

Profile1D pulse_modified_target(const Profile1D& F_T, const ChirpDesign& c) {
    return [F_T, c](double z) { return std::pow(q_broadening(z, c), 0.25) * F_T(z); };
}

std::vector<std::vector<double>> spatiotemporal_on_axis(const std::vector<double>& z_m,
                                                        const std::vector<double>& spatial_abs,
                                                        const std::vector<double>& t_fs,
                                                        const ChirpDesign& c) {
    if (z_m.size() != spatial_abs.size())
        throw std::invalid_argument("spatiotemporal_on_axis: z and spatial column sizes differ");
    std::vector<std::vector<double>> mesh(z_m.size(), std::vector<double>(t_fs.size()));
    for (std::size_t iz = 0; iz < z_m.size(); ++iz) {
        const double q = q_broadening(z_m[iz], c);
        const double peak = spatial_abs[iz] / std::pow(q, 0.25);
        const double inv_w2 = 1.0 / (c.tau0 * c.tau0 * q);
        for (std::size_t it = 0; it < t_fs.size(); ++it) {
            const double field = peak * std::exp(-t_fs[it] * t_fs[it] * inv_w2);
            mesh[iz][it] = field * field;
        }
    }
    return mesh;
}

}  // namespace ringshaper
