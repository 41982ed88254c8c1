#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlc/model.hpp"
#include "tlc/profiles.hpp"

#include "json.hpp"

namespace tlc {

struct PopulationSpec {
    std::string kind;  // "constant" | "sine_squared"
    double P = 0.0;    // constant
    double Pi = 0.0, Pf = 0.0;
};

struct PhaseSpec {
    std::string kind;  // "linear" | "quadratic" | "tanh"
    double alpha = 0.0;
    double Phi_i = 0.0, Phi_f = 0.0;
    double beta = 0.0;
    double t_vertex = 0.0;  // quadratic vertex time; tanh reference time
    std::optional<double> Phi_vertex;
};

struct NumericsConfig {
    double dt = 0.0;  // 0 selects the carrier-resolving default
    int n_samples = 2001;
    int grid_n = 201;
    int time_samples = 400;
    double phase_tol = kDefaultPhaseTol;
    double feas_tol = 1e-12;
    double tol_P = 0.02;
    double tol_Phi = 0.1;
    bool force = false;
    bool swap_thermal_rates = false;
    int workers = 0;
};

struct OutputConfig {
    std::string directory = "out";
    bool csv = true;
    bool pgm = true;
};

struct NoiseOverride {
    std::optional<double> gamma, Gamma, nbar;
    std::string suffix() const;
};

struct ExperimentConfig {
    std::string label = "run";
    SystemParams system;
    NoiseRates noise;  // fully derived
    std::optional<double> C0;
    std::optional<double> P0;    // optional cross-check against the profile
    std::optional<double> Phi0;  // optional cross-check against the phase
    std::optional<PopulationSpec> population;
    std::optional<PhaseSpec> phase;
    std::optional<double> t_f;
    NumericsConfig numerics;
    OutputConfig outputs;
    std::vector<NoiseOverride> sweep;

    nlohmann::json echo;  // normalized config, for the run manifest

    // Accessors that fail with a ConfigError naming the missing key.
    double require_t_f() const;
    double require_C0() const;
    PopulationProfile build_population() const;
    PhaseProfile build_phase() const;
    NoiseRates rates_with(const NoiseOverride& o) const;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);
ExperimentConfig load_config_string(const std::string& text);

}  // namespace tlc
