#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringshaper/errors.hpp"
#include "ringshaper/scenario.hpp"
#include "ringshaper/utils.hpp"

namespace {

int guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const ringshaper::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ringshaper::ResolutionError& e) {
        std::cerr << "resolution error: " << e.what()
                  << " (required samples ~" << e.required_samples << ")\n";
        return 3;
    } catch (const ringshaper::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringshaper: focuses an annular beam into a prescribed on-axis intensity "
                 "profile, bounds the achievable error, and verifies designs by propagation"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", phase_path, manifest_path, sweep_param;
    std::vector<double> sweep_values;

    auto* run = app.add_subcommand("run", "run one scenario and persist results");
    run->add_option("--config", config_path, "scenario config file")->required();
    run->add_option("--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->add_option("--config", config_path, "scenario config file")->required();
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--param", sweep_param, "swept parameter (WT_prime_m | W0_prime_m)");
    sweep->add_option("--values", sweep_values, "swept values")->delimiter(',');

    auto* bounds = app.add_subcommand("bounds", "bounds-only report, no solve");
    bounds->add_option("--config", config_path, "scenario config file")->required();

    auto* verify = app.add_subcommand("verify", "recompute I from a stored phase table");
    verify->add_option("--config", config_path, "scenario config file")->required();
    verify->add_option("--phase", phase_path, "phase table CSV")->required();
    verify->add_option("--manifest", manifest_path, "manifest to compare against (optional)");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        return guarded([&] {
            const auto cfg = ringshaper::parse_config_file(config_path);
            const auto res = ringshaper::run_scenario(cfg);
            ringshaper::emit(res, out_dir);
            std::cout << "I_stationary " << ringshaper::format_double(res.I_stationary)
                      << "\nI_gs " << ringshaper::format_double(res.I_gs)
                      << "\nmanifest_hash " << res.manifest_hash << "\n";
        });
    }
    if (sweep->parsed()) {
        return guarded([&] {
            auto cfg = ringshaper::parse_config_file(config_path);
            if (!sweep_param.empty() || !sweep_values.empty()) {
                ringshaper::SweepSpec sw;
                sw.param = sweep_param.empty() ? "WT_prime_m" : sweep_param;
                sw.values = sweep_values;
                cfg.sweep = sw;
                cfg.validate();
            }
            const auto out = ringshaper::run_sweep(cfg);
            ringshaper::emit_sweep(out, cfg, out_dir);
            for (const auto& row : out.summary)
                std::cout << cfg.sweep->param << "=" << ringshaper::format_double(row.value)
                          << " I_stationary=" << ringshaper::format_double(row.I_stationary)
                          << " I_gs=" << ringshaper::format_double(row.I_gs) << "\n";
        });
    }
    if (bounds->parsed()) {
        return guarded([&] {
            const auto cfg = ringshaper::parse_config_file(config_path);
            std::cout << ringshaper::bounds_report_json(cfg) << "\n";
        });
    }
    if (verify->parsed()) {
        return guarded([&] {
            const auto cfg = ringshaper::parse_config_file(config_path);
            const double I = ringshaper::verify_phase(cfg, phase_path);
            std::cout << "I_recomputed " << ringshaper::format_double(I) << "\n";
            if (!manifest_path.empty()) {
                const double stored = ringshaper::manifest_I_gs(manifest_path);
                const double rel = std::fabs(I - stored) / std::max(1e-300, std::fabs(stored));
                std::cout << "I_stored " << ringshaper::format_double(stored)
                          << "\nrelative_difference " << ringshaper::format_double(rel) << "\n";
                if (rel > 1e-12) throw ringshaper::ConfigError("verify: stored I not reproduced");
            }
        });
    }
    return 0;
}
