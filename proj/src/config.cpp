#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "ringshaper/errors.hpp"
#include "ringshaper/scenario.hpp"

namespace ringshaper {

std::string to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::RemoteBessel: return "remote-bessel";
        case ScenarioKind::Oscillatory: return "oscillatory";
        case ScenarioKind::Pulse: return "pulse";
        case ScenarioKind::Custom: return "custom";
    }
    return "custom";
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
    if (s == "remote-bessel") return ScenarioKind::RemoteBessel;
    if (s == "oscillatory") return ScenarioKind::Oscillatory;
    if (s == "pulse") return ScenarioKind::Pulse;
    if (s == "custom") return ScenarioKind::Custom;
    throw ConfigError("unknown scenario kind: '" + s + "'");
}

ScenarioConfig ScenarioConfig::preset(ScenarioKind kind) {
    ScenarioConfig c;
    c.kind = kind;
    switch (kind) {
        case ScenarioKind::RemoteBessel:
        case ScenarioKind::Custom:
            c.k_per_m = 9.5e6;
            c.r0_m = 0.3;
            c.zd_m = 1000.0;
            c.W0_prime_m = 0.07;
            c.WT_prime_m = 100.0;
            c.super_gaussian_n = 4;
            break;
        case ScenarioKind::Oscillatory:
            c.k_per_m = 9.7e6;
            c.r0_m = 0.05;
            c.zd_m = 1.0;
            c.W0_prime_m = 0.005;
            c.WT_prime_m = 0.001;
            c.oscillation_m = 10;
            break;
        case ScenarioKind::Pulse:
            c.k_per_m = 7.9e6;
            c.r0_m = 0.5;
            c.zd_m = 1000.0;
            c.W0_prime_m = 0.1;
            c.WT_prime_m = 20.0;
            c.super_gaussian_n = 8;
            c.gamma_fs2_per_m = 20.0;
            c.tau_T_fs = 50.0;
            break;
    }
    return c;
}

void ScenarioConfig::validate() const {
    std::vector<std::string> errs;
    auto require = [&](bool ok, const std::string& msg) {
        if (!ok) errs.push_back(msg);
    };
    require(k_per_m > 0.0, "k_per_m must be positive");
    require(r0_m > 0.0, "r0_m must be positive");
    require(zd_m > 0.0, "zd_m must be positive");
    require(E0_V_per_m > 0.0, "E0_V_per_m must be positive");
    require(W0_prime_m > 0.0, "W0_prime_m must be positive");
    require(WT_prime_m > 0.0, "WT_prime_m must be positive");
    require(super_gaussian_n >= 1, "super_gaussian_n must be >= 1");
    require(oscillation_m >= 1, "oscillation_m must be >= 1");
    if (kind == ScenarioKind::Pulse) {
        require(gamma_fs2_per_m != 0.0, "gamma_fs2_per_m must be nonzero for pulse scenarios");
        require(tau_T_fs > 0.0, "tau_T_fs must be positive");
    }
    require(solver.n_s >= 16, "solver.n_s must be >= 16");
    require(solver.n_omega >= 16, "solver.n_omega must be >= 16");
    require(solver.ode_steps >= 2, "solver.ode_steps must be >= 2");
    require(solver.gs_iterations >= 1, "solver.gs_iterations must be >= 1");
    require(solver.truncation_threshold > 0.0 && solver.truncation_threshold < 1.0,
            "solver.truncation_threshold must lie in (0,1)");
    if (sweep) {
        require(!sweep->values.empty(), "sweep.values must be nonempty");
        require(sweep->param == "WT_prime_m" || sweep->param == "W0_prime_m",
                "sweep.param must be WT_prime_m or W0_prime_m");
        bool sorted_positive = true;
        for (std::size_t i = 0; i < sweep->values.size(); ++i) {
            if (sweep->values[i] <= 0.0) sorted_positive = false;
            if (i > 0 && sweep->values[i] <= sweep->values[i - 1]) sorted_positive = false;
        }
        require(sorted_positive, "sweep.values must be positive and strictly increasing");
    }
    if (!errs.empty()) {
        std::string all = "invalid scenario config:";
        for (const auto& e : errs) all += "\n  - " + e;
        throw ConfigError(all);
    }
}

namespace {

struct RawValue {
    std::string text;
    int line = 0;
};

using RawConfig = std::map<std::string, RawValue>;  // "section.key" -> token

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

RawConfig tokenize(const std::string& text, const std::string& origin) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments outside quotes
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");
        raw[section.empty() ? key : section + "." + key] = {val, lineno};
    }
    return raw;
}

class Extractor {
public:
    Extractor(RawConfig raw, std::string origin) : raw_(std::move(raw)), origin_(std::move(origin)) {}

    bool has(const std::string& key) const { return raw_.count(key) > 0; }

    std::string take_string(const std::string& key) {
        const std::string t = take(key);
        if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
        return t;
    }

    double take_double(const std::string& key) {
        const std::string t = take(key);
        try {
            std::size_t pos = 0;
            const double v = std::stod(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            errs_.push_back(key + ": expected a number, got '" + t + "'");
            return 0.0;
        }
    }

    int take_int(const std::string& key) {
        const double v = take_double(key);
        return (int)v;
    }

    bool take_bool(const std::string& key) {
        const std::string t = take(key);
        if (t == "true") return true;
        if (t == "false") return false;
        errs_.push_back(key + ": expected true or false, got '" + t + "'");
        return false;
    }

    std::vector<double> take_array(const std::string& key) {
        const std::string t = take(key);
        std::vector<double> out;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
            errs_.push_back(key + ": expected an array like [1, 2, 3]");
            return out;
        }
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                errs_.push_back(key + ": bad array element '" + item + "'");
            }
        }
        return out;
    }

    void finish() {
        for (const auto& [key, val] : raw_)
            if (!consumed_.count(key))
                errs_.push_back(key + " (line " + std::to_string(val.line) + "): unknown key");
        if (!errs_.empty()) {
            std::string all = origin_ + ": invalid config:";
            for (const auto& e : errs_) all += "\n  - " + e;
            throw ConfigError(all);
        }
    }

private:
    std::string take(const std::string& key) {
        consumed_.insert(key);
        return raw_.at(key).text;
    }

    RawConfig raw_;
    std::string origin_;
    std::set<std::string> consumed_;
    std::vector<std::string> errs_;
};

}  // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
    RawConfig raw = tokenize(text, origin);

    ScenarioKind kind = ScenarioKind::Custom;
    if (auto it = raw.find("scenario.kind"); it != raw.end()) {
        std::string t = it->second.text;
        if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
        kind = scenario_kind_from_string(t);
    }
    ScenarioConfig cfg = ScenarioConfig::preset(kind);

    Extractor ex(std::move(raw), origin);
    if (ex.has("scenario.kind")) ex.take_string("scenario.kind");
    if (ex.has("scenario.beta_half_width")) cfg.beta_half_width = ex.take_bool("scenario.beta_half_width");

    if (ex.has("design.k_per_m")) cfg.k_per_m = ex.take_double("design.k_per_m");
    if (ex.has("design.r0_m")) cfg.r0_m = ex.take_double("design.r0_m");
    if (ex.has("design.zd_m")) cfg.zd_m = ex.take_double("design.zd_m");
    if (ex.has("design.E0_V_per_m")) cfg.E0_V_per_m = ex.take_double("design.E0_V_per_m");
    if (ex.has("design.W0_prime_m")) cfg.W0_prime_m = ex.take_double("design.W0_prime_m");
    if (ex.has("design.WT_prime_m")) cfg.WT_prime_m = ex.take_double("design.WT_prime_m");
    if (ex.has("design.super_gaussian_n")) cfg.super_gaussian_n = ex.take_int("design.super_gaussian_n");
    if (ex.has("design.oscillation_m")) cfg.oscillation_m = ex.take_int("design.oscillation_m");
    if (ex.has("design.gamma_fs2_per_m")) cfg.gamma_fs2_per_m = ex.take_double("design.gamma_fs2_per_m");
    if (ex.has("design.tau_T_fs")) cfg.tau_T_fs = ex.take_double("design.tau_T_fs");

    if (ex.has("solver.n_s")) cfg.solver.n_s = ex.take_int("solver.n_s");
    if (ex.has("solver.n_omega")) cfg.solver.n_omega = ex.take_int("solver.n_omega");
    if (ex.has("solver.ode_steps")) cfg.solver.ode_steps = ex.take_int("solver.ode_steps");
    if (ex.has("solver.gs_iterations")) cfg.solver.gs_iterations = ex.take_int("solver.gs_iterations");
    if (ex.has("solver.truncation_threshold"))
        cfg.solver.truncation_threshold = ex.take_double("solver.truncation_threshold");
    if (ex.has("solver.endpoint_tolerance"))
        cfg.solver.endpoint_tolerance = ex.take_double("solver.endpoint_tolerance");

    if (ex.has("sweep.param") || ex.has("sweep.values")) {
        SweepSpec sw;
        sw.param = ex.has("sweep.param") ? ex.take_string("sweep.param") : "WT_prime_m";
        if (ex.has("sweep.values")) sw.values = ex.take_array("sweep.values");
        cfg.sweep = sw;
    }

    ex.finish();
    cfg.validate();
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

}  // namespace ringshaper
