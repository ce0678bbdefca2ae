#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringshaper/bounds.hpp"
#include "ringshaper/caustic.hpp"
#include "ringshaper/fourier.hpp"
#include "ringshaper/gs.hpp"
#include "ringshaper/pulse.hpp"

namespace ringshaper {

enum class ScenarioKind { RemoteBessel, Oscillatory, Pulse, Custom };

std::string to_string(ScenarioKind k);
ScenarioKind scenario_kind_from_string(const std::string& s);

struct SolverKnobs {
    int n_s = 4096;
    int n_omega = 4096;
    int ode_steps = 4096;
    int gs_iterations = 100;
    double truncation_threshold = 1.2340980408667956e-4;  // exp(-9)
    double endpoint_tolerance = 1e-3;
    FourierFrame::Options frame;
};

struct SweepSpec {
    std::string param;  // "WT_prime_m" or "W0_prime_m"
    std::vector<double> values;
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::RemoteBessel;

    // physical design inputs (SI; fs quantities carry their own suffix)
    double k_per_m = 0.0;
    double r0_m = 0.0;
    double zd_m = 0.0;
    double E0_V_per_m = 1.0;
    double W0_prime_m = 0.0;
    double WT_prime_m = 0.0;
    int super_gaussian_n = 4;  // target order for remote-bessel / pulse
    int oscillation_m = 10;    // oscillatory target index

    // pulse extension
    double gamma_fs2_per_m = 20.0;
    double tau_T_fs = 50.0;

    bool beta_half_width = false;  // convention inside the Theorem-2 bound

    SolverKnobs solver;
    std::optional<SweepSpec> sweep;

    void validate() const;
    static ScenarioConfig preset(ScenarioKind kind);
};

// Parses the TOML-style key/value config (sections [scenario], [design],
// [solver], [sweep]); `kind` selects a preset whose values the file then
// overrides. Throws ConfigError listing every offending key.
ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);

struct OnAxisRow {
    double z = 0.0;
    double target = 0.0;      // (ET F_T)^2
    double stationary = 0.0;  // |E(0,z)|^2 for the stationary-phase design
    double gs = 0.0;          // |E(0,z)|^2 after Gerchberg-Saxton refinement
};

struct ScenarioResult {
    ScenarioConfig config;
    DesignParams params;
    BoundsReport bounds;
    std::vector<double> delta_values;  // oscillatory kind, m = 1, 5, 10, 15, cfg
    std::vector<int> delta_ms;
    std::optional<ChirpDesign> chirp;

    double kbar = 0.0;
    double caustic_endpoint_error = 0.0;
    double I_stationary = 0.0;
    double I_gs = 0.0;
    double norm_G_frame = 0.0;  // ||G_ext|| on the frame (normalizer for I)
    int stagnation_iter = -1;
    bool bound_sound = false;  // I_gs >= master lower bound (when normalized)
    bool captured_mass_warning = false;

    // tables
    std::vector<double> phase_s_nodes;          // frame s-grid
    std::vector<double> phi_stationary;         // on frame s-grid
    std::vector<double> phi_gs;
    std::vector<double> gs_trace_I;
    std::vector<OnAxisRow> on_axis;
    std::vector<double> pulse_z, pulse_t;       // pulse mesh axes
    std::vector<std::vector<double>> pulse_mesh;

    std::string manifest_json;  // serialized manifest (includes its own hash)
    std::string manifest_hash;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg);

// Bounds-only report (no caustic solve, no refinement), as manifest-style
// JSON text.
std::string bounds_report_json(const ScenarioConfig& cfg);

struct SweepSummaryRow {
    double value = 0.0;
    double I_stationary = 0.0, I_gs = 0.0;
    double I_stationary_normalized = 0.0, I_gs_normalized = 0.0;
    double master_bound = 0.0, beta_full = 0.0, beta_half = 0.0;
};

struct SweepOutcome {
    std::vector<ScenarioResult> results;
    std::vector<SweepSummaryRow> summary;
};

// Runs every sweep point in a worker pool (RINGSHAPER_THREADS caps it).
SweepOutcome run_sweep(const ScenarioConfig& cfg);

// Writes phase tables, on-axis table, trace, pulse mesh, manifest.json.
void emit(const ScenarioResult& res, const std::string& dir);
void emit_sweep(const SweepOutcome& out, const ScenarioConfig& cfg, const std::string& dir);

// Recomputes I from a stored phase table against the config's target and
// returns it (bit-for-bit reconstruction of the frame).
double verify_phase(const ScenarioConfig& cfg, const std::string& phase_csv_path);

// Stored I value from a manifest, for the verify CLI verb.
double manifest_I_gs(const std::string& manifest_path);

}  // namespace ringshaper
