#include "tlc/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace tlc {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
        }
    }
}

double req_num(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) throw ConfigError(where + ": missing required key '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return v.get<double>();
}

std::optional<double> opt_num(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return v.get<double>();
}

int opt_int(const json& obj, const std::string& where, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

bool opt_bool(const json& obj, const std::string& where, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) throw ConfigError(where + "." + key + ": expected a boolean");
    return v.get<bool>();
}

std::string req_str(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) throw ConfigError(where + ": missing required key '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

}  // namespace

std::string NoiseOverride::suffix() const {
    std::string s;
    auto app = [&s](const char* name, const std::optional<double>& v) {
        if (v) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "_%s%g", name, *v);
            s += buf;
        }
    };
    app("gamma", gamma);
    app("Gamma", Gamma);
    app("nbar", nbar);
    return s;
}

double ExperimentConfig::require_t_f() const {
    if (!t_f) throw ConfigError("config: missing required key 't_f'");
    return *t_f;
}

double ExperimentConfig::require_C0() const {
    if (!C0) throw ConfigError("config: missing required key 'initial.C0'");
    return *C0;
}

PopulationProfile ExperimentConfig::build_population() const {
    if (!population) throw ConfigError("config: missing required section 'population'");
    const double tf = require_t_f();
    try {
        if (population->kind == "constant") {
            return PopulationProfile::constant(population->P, tf);
        }
        if (population->kind == "sine_squared") {
            return PopulationProfile::sine_squared(population->Pi, population->Pf, tf);
        }
    } catch (const DomainError& e) {
        throw ConfigError(std::string("population: ") + e.what());
    }
    throw ConfigError("population.kind: expected 'constant' or 'sine_squared'");
}

PhaseProfile ExperimentConfig::build_phase() const {
    if (!phase) throw ConfigError("config: missing required section 'phase'");
    const double tf = require_t_f();
    try {
        if (phase->kind == "linear") return PhaseProfile::linear(phase->alpha, tf);
        if (phase->kind == "quadratic") {
            return PhaseProfile::quadratic(phase->Phi_i, phase->Phi_f, phase->t_vertex, tf,
                                           phase->Phi_vertex);
        }
        if (phase->kind == "tanh") {
            return PhaseProfile::tanh_step(phase->Phi_i, phase->Phi_f, phase->beta,
                                           phase->t_vertex, tf);
        }
    } catch (const DomainError& e) {
        throw ConfigError(std::string("phase: ") + e.what());
    }
    throw ConfigError("phase.kind: expected 'linear', 'quadratic' or 'tanh'");
}

NoiseRates ExperimentConfig::rates_with(const NoiseOverride& o) const {
    return derive_rates(o.gamma.value_or(noise.gamma), o.Gamma.value_or(noise.Gamma),
                        o.nbar.value_or(noise.nbar));
}

ExperimentConfig parse_config(const json& j) {
    check_keys(j, "config",
               {"label", "system", "noise", "initial", "population", "phase", "t_f", "numerics",
                "outputs", "sweep"});
    ExperimentConfig cfg;

    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw ConfigError("label: expected a string");
        cfg.label = j.at("label").get<std::string>();
    }

    if (!j.contains("system")) throw ConfigError("config: missing required section 'system'");
    {
        const auto& s = j.at("system");
        check_keys(s, "system", {"omega", "mu", "omega_p"});
        cfg.system.omega = req_num(s, "system", "omega");
        cfg.system.mu = req_num(s, "system", "mu");
        cfg.system.omega_p = opt_num(s, "system", "omega_p").value_or(cfg.system.omega);
        try {
            cfg.system.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    }

    double gamma = 0.0, Gamma = 0.0, nbar = 0.0;
    if (j.contains("noise")) {
        const auto& n = j.at("noise");
        check_keys(n, "noise", {"gamma", "Gamma", "nbar"});
        gamma = opt_num(n, "noise", "gamma").value_or(0.0);
        Gamma = opt_num(n, "noise", "Gamma").value_or(0.0);
        nbar = opt_num(n, "noise", "nbar").value_or(0.0);
    }
    try {
        cfg.noise = derive_rates(gamma, Gamma, nbar);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("noise: ") + e.what());
    }

    if (j.contains("initial")) {
        const auto& i = j.at("initial");
        check_keys(i, "initial", {"C0", "P0", "Phi0"});
        cfg.C0 = opt_num(i, "initial", "C0");
        cfg.P0 = opt_num(i, "initial", "P0");
        cfg.Phi0 = opt_num(i, "initial", "Phi0");
        if (cfg.C0 && *cfg.C0 < 0.0) throw ConfigError("initial.C0: must be >= 0");
    }

    if (j.contains("population")) {
        const auto& p = j.at("population");
        PopulationSpec spec;
        spec.kind = req_str(p, "population", "kind");
        if (spec.kind == "constant") {
            check_keys(p, "population", {"kind", "P"});
            spec.P = req_num(p, "population", "P");
        } else if (spec.kind == "sine_squared") {
            check_keys(p, "population", {"kind", "Pi", "Pf"});
            spec.Pi = req_num(p, "population", "Pi");
            spec.Pf = req_num(p, "population", "Pf");
        } else {
            throw ConfigError("population.kind: expected 'constant' or 'sine_squared'");
        }
        cfg.population = spec;
    }

    if (j.contains("phase")) {
        const auto& p = j.at("phase");
        PhaseSpec spec;
        spec.kind = req_str(p, "phase", "kind");
        if (spec.kind == "linear") {
            check_keys(p, "phase", {"kind", "alpha"});
            spec.alpha = req_num(p, "phase", "alpha");
        } else if (spec.kind == "quadratic") {
            check_keys(p, "phase", {"kind", "Phi_i", "Phi_f", "t_vertex", "Phi_vertex"});
            spec.Phi_i = req_num(p, "phase", "Phi_i");
            spec.Phi_f = req_num(p, "phase", "Phi_f");
            spec.t_vertex = req_num(p, "phase", "t_vertex");
            spec.Phi_vertex = opt_num(p, "phase", "Phi_vertex");
        } else if (spec.kind == "tanh") {
            check_keys(p, "phase", {"kind", "Phi_i", "Phi_f", "beta", "t_vertex"});
            spec.Phi_i = req_num(p, "phase", "Phi_i");
            spec.Phi_f = req_num(p, "phase", "Phi_f");
            spec.beta = req_num(p, "phase", "beta");
            spec.t_vertex = req_num(p, "phase", "t_vertex");
        } else {
            throw ConfigError("phase.kind: expected 'linear', 'quadratic' or 'tanh'");
        }
        cfg.phase = spec;
    }

    if (j.contains("t_f")) {
        if (!j.at("t_f").is_number()) throw ConfigError("t_f: expected a number");
        cfg.t_f = j.at("t_f").get<double>();
        if (!(*cfg.t_f > 0.0)) throw ConfigError("t_f: must be > 0");
    }

    if (j.contains("numerics")) {
        const auto& n = j.at("numerics");
        check_keys(n, "numerics",
                   {"dt", "n_samples", "grid_n", "time_samples", "phase_tol", "feas_tol", "tol_P",
                    "tol_Phi", "force", "swap_thermal_rates", "workers"});
        cfg.numerics.dt = opt_num(n, "numerics", "dt").value_or(0.0);
        cfg.numerics.n_samples = opt_int(n, "numerics", "n_samples", cfg.numerics.n_samples);
        cfg.numerics.grid_n = opt_int(n, "numerics", "grid_n", cfg.numerics.grid_n);
        cfg.numerics.time_samples =
            opt_int(n, "numerics", "time_samples", cfg.numerics.time_samples);
        cfg.numerics.phase_tol = opt_num(n, "numerics", "phase_tol").value_or(kDefaultPhaseTol);
        cfg.numerics.feas_tol = opt_num(n, "numerics", "feas_tol").value_or(1e-12);
        cfg.numerics.tol_P = opt_num(n, "numerics", "tol_P").value_or(0.02);
        cfg.numerics.tol_Phi = opt_num(n, "numerics", "tol_Phi").value_or(0.1);
        cfg.numerics.force = opt_bool(n, "numerics", "force", false);
        cfg.numerics.swap_thermal_rates = opt_bool(n, "numerics", "swap_thermal_rates", false);
        cfg.numerics.workers = opt_int(n, "numerics", "workers", 0);
    }

    if (j.contains("outputs")) {
        const auto& o = j.at("outputs");
        check_keys(o, "outputs", {"directory", "formats"});
        if (o.contains("directory")) {
            if (!o.at("directory").is_string()) throw ConfigError("outputs.directory: expected a string");
            cfg.outputs.directory = o.at("directory").get<std::string>();
        }
        if (o.contains("formats")) {
            const auto& f = o.at("formats");
            if (!f.is_array()) throw ConfigError("outputs.formats: expected an array");
            cfg.outputs.csv = cfg.outputs.pgm = false;
            for (const auto& e : f) {
                if (!e.is_string()) throw ConfigError("outputs.formats: expected strings");
                const std::string v = e.get<std::string>();
                if (v == "csv") cfg.outputs.csv = true;
                else if (v == "pgm") cfg.outputs.pgm = true;
                else throw ConfigError("outputs.formats: unknown format '" + v + "'");
            }
        }
    }

    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        if (!s.is_array()) throw ConfigError("sweep: expected an array of noise overrides");
        for (const auto& e : s) {
            check_keys(e, "sweep[]", {"gamma", "Gamma", "nbar"});
            NoiseOverride o;
            o.gamma = opt_num(e, "sweep[]", "gamma");
            o.Gamma = opt_num(e, "sweep[]", "Gamma");
            o.nbar = opt_num(e, "sweep[]", "nbar");
            cfg.sweep.push_back(o);
        }
    }

    cfg.echo = j;
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

ExperimentConfig load_config_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

}  // namespace tlc
