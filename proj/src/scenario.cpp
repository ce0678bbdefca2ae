#include "ringshaper/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ringshaper/errors.hpp"
#include "ringshaper/profiles.hpp"
#include "ringshaper/spectral.hpp"
#include "ringshaper/utils.hpp"

namespace ringshaper {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Pipeline {
    DesignParams params;
    Profile1D f;
    Profile1D F_T;       // design target (pulse: q^{1/4}-modified, renormalized)
    Profile1D F_T_base;  // unmodified shape
    SGrid sgrid;
    OmegaGrid wgrid;
    FourierFrame frame;
    std::vector<double> g_frame;
    std::vector<double> phi_zero;
    std::vector<double> G_ext;
    std::optional<ChirpDesign> chirp;
};

Pipeline build_pipeline(const ScenarioConfig& cfg) {
    cfg.validate();
    const double thr = cfg.solver.truncation_threshold;

    GaussianRing ring{cfg.r0_m, cfg.W0_prime_m};
    const double W0 = ring.support_width(thr);

    Profile1D base;
    double WT = 0.0;
    if (cfg.kind == ScenarioKind::Oscillatory) {
        OscillatoryTarget t{cfg.zd_m, cfg.WT_prime_m, cfg.oscillation_m};
        WT = t.support_width(thr);
        base = t;
    } else {
        SuperGaussian t{cfg.zd_m, cfg.WT_prime_m, cfg.super_gaussian_n};
        WT = t.support_width(thr);
        base = t;
    }

    std::optional<ChirpDesign> chirp;
    Profile1D design = base;
    if (cfg.kind == ScenarioKind::Pulse) {
        chirp = chirp_parameters(cfg.tau_T_fs, cfg.zd_m, cfg.gamma_fs2_per_m);
        design = pulse_modified_target(base, *chirp);
    }

    DesignParams p;
    p.k = cfg.k_per_m;
    p.r0 = cfg.r0_m;
    p.W0 = W0;
    p.zd = cfg.zd_m;
    p.WT = WT;
    p.E0 = cfg.E0_V_per_m;
    p.ET = 1.0;  // placeholder for validate()
    p.validate();
    p.ET = normalize_target(p.E0, ring, p.r0 - 0.5 * W0, p.r0 + 0.5 * W0, design,
                            p.zd - 0.5 * WT, p.zd + 0.5 * WT, p.k);

    auto [sgrid, wgrid] = build_grids(p, cfg.solver.n_s, cfg.solver.n_omega);
    FourierFrame frame = FourierFrame::build(sgrid, wgrid, cfg.solver.frame);

    std::vector<double> g(frame.object_size(), 0.0);
    for (int m = 0; m < frame.object_size(); ++m) {
        const double v = p.E0 * ring(std::sqrt(frame.s(m)));
        g[m] = v >= thr * p.E0 ? v : 0.0;
    }
    std::vector<double> G =
        make_target_on_frame(design, p.ET, p.k, frame, wgrid.omega_min, wgrid.omega_max);

    return Pipeline{p,     ring,  design, base, sgrid, wgrid,
                    frame, std::move(g), std::vector<double>(frame.object_size(), 0.0),
                    std::move(G), chirp};
}

ordered_json bounds_to_json(const BoundsReport& b) {
    ordered_json j;
    j["beta_full_width"] = b.beta_full;
    j["beta_half_width"] = b.beta_half;
    j["norm_g_l1"] = b.norm_g_l1;
    j["norm_g_l2"] = b.norm_g_l2;
    j["norm_G_l1"] = b.norm_G_l1;
    j["norm_G_l2"] = b.norm_G_l2;
    j["plancherel_lower"] = b.plancherel.lower;
    j["plancherel_upper"] = b.plancherel.upper;
    j["normalized"] = b.normalized;
    j["thm2_lower"] = b.thm2_lower;
    j["thm3_lower_g"] = b.thm3_lower_g;
    j["thm3_lower_G"] = b.thm3_lower_G;
    j["best_local_lower"] = b.best_local.value;
    j["best_local_zd_prime"] = b.best_local.zd_prime;
    j["best_local_WT_prime"] = b.best_local.WT_prime;
    j["master_lower"] = b.master();
    return j;
}

ordered_json config_to_json(const ScenarioConfig& cfg) {
    ordered_json j;
    j["kind"] = to_string(cfg.kind);
    j["k_per_m"] = cfg.k_per_m;
    j["r0_m"] = cfg.r0_m;
    j["zd_m"] = cfg.zd_m;
    j["E0_V_per_m"] = cfg.E0_V_per_m;
    j["W0_prime_m"] = cfg.W0_prime_m;
    j["WT_prime_m"] = cfg.WT_prime_m;
    j["super_gaussian_n"] = cfg.super_gaussian_n;
    j["oscillation_m"] = cfg.oscillation_m;
    if (cfg.kind == ScenarioKind::Pulse) {
        j["gamma_fs2_per_m"] = cfg.gamma_fs2_per_m;
        j["tau_T_fs"] = cfg.tau_T_fs;
    }
    j["beta_half_width"] = cfg.beta_half_width;
    ordered_json s;
    s["n_s"] = cfg.solver.n_s;
    s["n_omega"] = cfg.solver.n_omega;
    s["ode_steps"] = cfg.solver.ode_steps;
    s["gs_iterations"] = cfg.solver.gs_iterations;
    s["truncation_threshold"] = cfg.solver.truncation_threshold;
    s["endpoint_tolerance"] = cfg.solver.endpoint_tolerance;
    j["solver"] = s;
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing", path);
    out << content;
    if (!out) throw IoError("write failed", path);
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    Pipeline pl = build_pipeline(cfg);
    ScenarioResult res;
    res.config = cfg;
    res.params = pl.params;
    res.chirp = pl.chirp;

    // bounds and diagnostics against the design target
    res.bounds = make_bounds_report(pl.f, pl.F_T, pl.params,
                                    cfg.beta_half_width ? BetaConvention::HalfWidth
                                                        : BetaConvention::FullWidth);
    if (cfg.kind == ScenarioKind::Oscillatory) {
        const double r_lo = pl.params.r0 - 0.5 * pl.params.W0;
        const double r_hi = pl.params.r0 + 0.5 * pl.params.W0;
        const double z_lo = pl.params.zd - 0.5 * pl.params.WT;
        const double z_hi = pl.params.zd + 0.5 * pl.params.WT;
        std::vector<int> ms = {1, 5, 10, 15};
        if (std::find(ms.begin(), ms.end(), cfg.oscillation_m) == ms.end())
            ms.push_back(cfg.oscillation_m);
        for (int m : ms) {
            // each m has its own target shape and normalization
            OscillatoryTarget t{cfg.zd_m, cfg.WT_prime_m, m};
            DesignParams pm = pl.params;
            pm.ET = normalize_target(pm.E0, pl.f, r_lo, r_hi, t, z_lo, z_hi, pm.k);
            const PairNorms nm = pair_norms(pl.f, pm.E0, r_lo, r_hi, t, pm.ET, pm.k, z_lo, z_hi);
            res.delta_ms.push_back(m);
            res.delta_values.push_back(delta_m(t, pm.ET, nm, pm, m, cfg.WT_prime_m));
        }
    }

    // stationary-phase construction
    const CausticMap map = solve_caustic_map(pl.f, pl.F_T, pl.params, cfg.solver.ode_steps);
    res.kbar = map.kbar;
    res.caustic_endpoint_error = map.endpoint_error();
    if (res.caustic_endpoint_error > cfg.solver.endpoint_tolerance)
        throw ResolutionError("caustic solver endpoint error " +
                                  format_double(res.caustic_endpoint_error) +
                                  " exceeds tolerance; increase ode_steps",
                              2L * cfg.solver.ode_steps);
    const PhaseFunction phase = integrate_phase(map, pl.params);

    res.phase_s_nodes = pl.frame.s_nodes();
    res.phi_stationary.resize(pl.frame.object_size());
    for (int m = 0; m < pl.frame.object_size(); ++m)
        res.phi_stationary[m] = phase.phi_at_s(res.phase_s_nodes[m]);

    // functional value and refinement
    res.I_stationary = error_functional(pl.frame, pl.G_ext, pl.g_frame, res.phi_stationary);
    const GsTrace trace =
        run_gs(res.phi_stationary, pl.g_frame, pl.G_ext, pl.frame, cfg.solver.gs_iterations);
    res.I_gs = trace.I.back();
    res.gs_trace_I = trace.I;
    res.stagnation_iter = trace.stagnation_iter;
    res.phi_gs = trace.phi.back();

    double normG = 0.0;
    for (double Gj : pl.G_ext) normG += Gj * Gj;
    res.norm_G_frame = std::sqrt(pl.frame.domega() * normG);
    res.bound_sound = !res.bounds.normalized ||
                      res.I_gs + 1e-9 * res.norm_G_frame >= res.bounds.master();

    // on-axis table over a 1.5x-widened target window, from the frame bins
    {
        std::vector<cplx> x_stat(pl.frame.object_size()), x_gs(pl.frame.object_size());
        for (int m = 0; m < pl.frame.object_size(); ++m) {
            x_stat[m] = std::polar(pl.g_frame[m], res.phi_stationary[m]);
            x_gs[m] = std::polar(pl.g_frame[m], res.phi_gs[m]);
        }
        const auto F_stat = pl.frame.forward(x_stat);
        const auto F_gs = pl.frame.forward(x_gs);
        res.captured_mass_warning = pl.frame.edge_mass_fraction(F_gs) > 1e-4 ||
                                    pl.frame.edge_mass_fraction(F_stat) > 1e-4;
        const double c = pl.wgrid.center(), w = pl.wgrid.width();
        for (int j = 0; j < pl.frame.spectrum_size(); ++j) {
            const double omega = pl.frame.omega(j);
            if (omega < c - 0.75 * w || omega > c + 0.75 * w) continue;
            OnAxisRow row;
            row.z = z_of_omega(omega, pl.params.k);
            const double tgt = pl.params.ET * pl.F_T(row.z);
            row.target = tgt * tgt;
            row.stationary = std::norm(F_stat[j]) * omega * omega;
            row.gs = std::norm(F_gs[j]) * omega * omega;
            res.on_axis.push_back(row);
        }
        std::sort(res.on_axis.begin(), res.on_axis.end(),
                  [](const OnAxisRow& a, const OnAxisRow& b) { return a.z < b.z; });
    }

    // pulse mesh: |E(0,z,t)|^2 against the refined design
    if (pl.chirp) {
        for (const OnAxisRow& row : res.on_axis) res.pulse_z.push_back(row.z);
        std::vector<double> spatial;
        double wmax = 0.0;
        for (const OnAxisRow& row : res.on_axis) {
            spatial.push_back(std::sqrt(row.gs));
            wmax = std::max(wmax, temporal_width(row.z, *pl.chirp));
        }
        const int nt = 121;
        for (int i = 0; i < nt; ++i)
            res.pulse_t.push_back(-2.0 * wmax + 4.0 * wmax * i / (nt - 1));
        res.pulse_mesh = spatiotemporal_on_axis(res.pulse_z, spatial, res.pulse_t, *pl.chirp);
    }

    // manifest
    ordered_json j;
    j["tool"] = "ringshaper";
    j["schema"] = 1;
    j["scenario"] = config_to_json(cfg);
    ordered_json dp;
    dp["k_per_m"] = pl.params.k;
    dp["r0_m"] = pl.params.r0;
    dp["W0_m"] = pl.params.W0;
    dp["zd_m"] = pl.params.zd;
    dp["WT_m"] = pl.params.WT;
    dp["E0_V_per_m"] = pl.params.E0;
    dp["ET_V_per_m"] = pl.params.ET;
    j["design_params"] = dp;
    ordered_json fr;
    fr["object_samples"] = pl.frame.object_size();
    fr["fft_size"] = pl.frame.spectrum_size();
    fr["ds_m2"] = pl.frame.ds();
    fr["domega_per_m2"] = pl.frame.domega();
    fr["omega_center_per_m2"] = pl.frame.omega_center();
    fr["window_width_per_m2"] = pl.frame.window_width();
    j["fourier_frame"] = fr;
    j["bounds"] = bounds_to_json(res.bounds);
    if (!res.delta_ms.empty()) {
        j["delta_m"]["m"] = res.delta_ms;
        j["delta_m"]["delta"] = res.delta_values;
    }
    if (res.chirp) {
        ordered_json cj;
        cj["gamma_fs2_per_m"] = res.chirp->gamma;
        cj["tau_T_fs"] = res.chirp->tau_T;
        cj["tau0_fs"] = res.chirp->tau0;
        cj["alpha_fs"] = res.chirp->alpha;
        cj["q_at_zd"] = q_broadening(res.chirp->zd, *res.chirp);
        j["chirp"] = cj;
    }
    ordered_json rj;
    rj["kbar"] = res.kbar;
    rj["caustic_endpoint_error"] = res.caustic_endpoint_error;
    rj["I_stationary"] = res.I_stationary;
    rj["I_gs"] = res.I_gs;
    rj["norm_G_frame"] = res.norm_G_frame;
    rj["I_stationary_normalized"] = res.I_stationary / res.norm_G_frame;
    rj["I_gs_normalized"] = res.I_gs / res.norm_G_frame;
    rj["stagnation_iter"] = res.stagnation_iter;
    rj["bound_sound"] = res.bound_sound;
    rj["captured_mass_warning"] = res.captured_mass_warning;
    j["results"] = rj;

    res.manifest_hash = fnv1a_hex(j.dump(2));
    j["manifest_hash"] = res.manifest_hash;
    res.manifest_json = j.dump(2);
    return res;
}

std::string bounds_report_json(const ScenarioConfig& cfg) {
    Pipeline pl = build_pipeline(cfg);
    const BoundsReport b = make_bounds_report(pl.f, pl.F_T, pl.params,
                                              cfg.beta_half_width ? BetaConvention::HalfWidth
                                                                  : BetaConvention::FullWidth);
    ordered_json j;
    j["tool"] = "ringshaper";
    j["scenario"] = config_to_json(cfg);
    ordered_json dp;
    dp["W0_m"] = pl.params.W0;
    dp["WT_m"] = pl.params.WT;
    dp["ET_V_per_m"] = pl.params.ET;
    j["design_params"] = dp;
    j["bounds"] = bounds_to_json(b);
    if (cfg.kind == ScenarioKind::Oscillatory) {
        const double r_lo = pl.params.r0 - 0.5 * pl.params.W0;
        const double r_hi = pl.params.r0 + 0.5 * pl.params.W0;
        const double z_lo = pl.params.zd - 0.5 * pl.params.WT;
        const double z_hi = pl.params.zd + 0.5 * pl.params.WT;
        std::vector<int> ms = {1, 5, 10, 15};
        std::vector<double> squared, unsquared;
        for (int m : ms) {
            OscillatoryTarget t{cfg.zd_m, cfg.WT_prime_m, m};
            DesignParams pm = pl.params;
            pm.ET = normalize_target(pm.E0, pl.f, r_lo, r_hi, t, z_lo, z_hi, pm.k);
            const PairNorms nm = pair_norms(pl.f, pm.E0, r_lo, r_hi, t, pm.ET, pm.k, z_lo, z_hi);
            squared.push_back(delta_m(t, pm.ET, nm, pm, m, cfg.WT_prime_m, 2));
            unsquared.push_back(delta_m(t, pm.ET, nm, pm, m, cfg.WT_prime_m, 1));
        }
        j["delta_m"]["m"] = ms;
        j["delta_m"]["squared_l1"] = squared;
        j["delta_m"]["unsquared_l1"] = unsquared;
    }
    return j.dump(2);
}

SweepOutcome run_sweep(const ScenarioConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("run_sweep: config has no sweep specification");
    cfg.validate();
    const SweepSpec& sw = *cfg.sweep;

    SweepOutcome out;
    out.results.resize(sw.values.size());
    std::vector<std::string> errors(sw.values.size());
    parallel_for((int)sw.values.size(), [&](int i) {
        ScenarioConfig point = cfg;
        point.sweep.reset();
        if (sw.param == "WT_prime_m")
            point.WT_prime_m = sw.values[i];
        else
            point.W0_prime_m = sw.values[i];
        try {
            out.results[i] = run_scenario(point);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw ConfigError("sweep point " + format_double(sw.values[i]) + " failed: " + errors[i]);

    for (std::size_t i = 0; i < sw.values.size(); ++i) {
        const ScenarioResult& r = out.results[i];
        SweepSummaryRow row;
        row.value = sw.values[i];
        row.I_stationary = r.I_stationary;
        row.I_gs = r.I_gs;
        row.I_stationary_normalized = r.I_stationary / r.norm_G_frame;
        row.I_gs_normalized = r.I_gs / r.norm_G_frame;
        row.master_bound = r.bounds.master();
        row.beta_full = r.bounds.beta_full;
        row.beta_half = r.bounds.beta_half;
        out.summary.push_back(row);
    }
    return out;
}

void emit(const ScenarioResult& res, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory", dir);

    {
        std::ostringstream csv;
        csv << "r_m,phi_rad\n";
        for (std::size_t m = 0; m < res.phase_s_nodes.size(); ++m)
            csv << format_double(std::sqrt(res.phase_s_nodes[m])) << ","
                << format_double(res.phi_stationary[m]) << "\n";
        write_file(dir + "/phase_stationary.csv", csv.str());
    }
    {
        std::ostringstream csv;
        csv << "r_m,phi_rad\n";
        for (std::size_t m = 0; m < res.phase_s_nodes.size(); ++m)
            csv << format_double(std::sqrt(res.phase_s_nodes[m])) << ","
                << format_double(res.phi_gs[m]) << "\n";
        write_file(dir + "/phase_gs.csv", csv.str());
    }
    {
        const auto resid_stat =
            lens_decompose(res.phi_stationary, res.phase_s_nodes, res.params.k, res.params.zd);
        const auto resid_gs =
            lens_decompose(res.phi_gs, res.phase_s_nodes, res.params.k, res.params.zd);
        std::ostringstream csv;
        csv << "r_m,phi_zd_stationary_rad,phi_zd_gs_rad\n";
        for (std::size_t m = 0; m < res.phase_s_nodes.size(); ++m)
            csv << format_double(std::sqrt(res.phase_s_nodes[m])) << ","
                << format_double(resid_stat[m]) << "," << format_double(resid_gs[m]) << "\n";
        write_file(dir + "/phase_lens_residual.csv", csv.str());
    }
    {
        std::ostringstream csv;
        csv << "z_m,target_intensity,stationary_phase_intensity,gs_intensity\n";
        for (const OnAxisRow& row : res.on_axis)
            csv << format_double(row.z) << "," << format_double(row.target) << ","
                << format_double(row.stationary) << "," << format_double(row.gs) << "\n";
        write_file(dir + "/on_axis.csv", csv.str());
    }
    {
        std::ostringstream csv;
        csv << "iteration,I\n";
        for (std::size_t n = 0; n < res.gs_trace_I.size(); ++n)
            csv << n << "," << format_double(res.gs_trace_I[n]) << "\n";
        write_file(dir + "/gs_trace.csv", csv.str());
    }
    if (!res.pulse_mesh.empty()) {
        std::ostringstream csv;
        csv << "z_m,t_fs,intensity\n";
        for (std::size_t iz = 0; iz < res.pulse_z.size(); ++iz)
            for (std::size_t it = 0; it < res.pulse_t.size(); ++it)
                csv << format_double(res.pulse_z[iz]) << "," << format_double(res.pulse_t[it])
                    << "," << format_double(res.pulse_mesh[iz][it]) << "\n";
        write_file(dir + "/pulse_mesh.csv", csv.str());
    }
    write_file(dir + "/manifest.json", res.manifest_json + "\n");
}

void emit_sweep(const SweepOutcome& out, const ScenarioConfig& cfg, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory", dir);

    for (std::size_t i = 0; i < out.results.size(); ++i) {
        std::ostringstream sub;
        sub << dir << "/point_" << format_double(out.summary[i].value);
        emit(out.results[i], sub.str());
    }
    std::ostringstream csv;
    csv << cfg.sweep->param
        << ",I_stationary,I_gs,I_stationary_normalized,I_gs_normalized,master_bound,beta_full,"
           "beta_half\n";
    for (const SweepSummaryRow& r : out.summary)
        csv << format_double(r.value) << "," << format_double(r.I_stationary) << ","
            << format_double(r.I_gs) << "," << format_double(r.I_stationary_normalized) << ","
            << format_double(r.I_gs_normalized) << "," << format_double(r.master_bound) << ","
            << format_double(r.beta_full) << "," << format_double(r.beta_half) << "\n";
    write_file(dir + "/sweep_summary.csv", csv.str());
}

double verify_phase(const ScenarioConfig& cfg, const std::string& phase_csv_path) {
    Pipeline pl = build_pipeline(cfg);

    std::ifstream in(phase_csv_path);
    if (!in) throw IoError("cannot open phase table", phase_csv_path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> phi;
    int m = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("verify: malformed phase table row: " + line);
        const double r = std::stod(line.substr(0, comma));
        const double value = std::stod(line.substr(comma + 1));
        if (m >= pl.frame.object_size())
            throw ConfigError("verify: phase table longer than the frame grid");
        const double expect_r = std::sqrt(pl.frame.s(m));
        if (std::fabs(r - expect_r) > 1e-9 * expect_r)
            throw ConfigError("verify: phase table grid does not match the config frame");
        phi.push_back(value);
        ++m;
    }
    if (m != pl.frame.object_size())
        throw ConfigError("verify: phase table shorter than the frame grid");
    return error_functional(pl.frame, pl.G_ext, pl.g_frame, phi);
}

double manifest_I_gs(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open manifest", manifest_path);
    ordered_json j;
    in >> j;
    return j.at("results").at("I_gs").get<double>();
}

}  // namespace ringshaper
