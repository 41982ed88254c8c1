#pragma once

#include <string>

#include "tlc/config.hpp"
#include "tlc/propagate.hpp"
#include "tlc/synthesis.hpp"

namespace tlc {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitTolerance = 4;

struct TrackReport {
    double max_pop_error = 0.0;
    double max_phase_error = 0.0;
    double final_pop_error = 0.0;
    double final_phase_error = 0.0;
    size_t phase_samples = 0;
    bool passed = false;
};

// The synthesis front half shared by synth/track/propagate.
struct Pipeline {
    PopulationProfile pop;
    PhaseProfile phase;
    CoherenceSolution coh;
    ControlField field;
};

Pipeline build_pipeline(const ExperimentConfig& cfg);

int cmd_synth(const ExperimentConfig& cfg);
int cmd_track(const ExperimentConfig& cfg, TrackReport* report_out = nullptr);
int cmd_propagate(const ExperimentConfig& cfg);
int cmd_reach(const ExperimentConfig& cfg);
int cmd_steady(const ExperimentConfig& cfg);
int cmd_coherence(const ExperimentConfig& cfg);

int run_command(const std::string& command, const ExperimentConfig& cfg);

// run_command with exceptions mapped to the exit codes above.
int run_guarded(const std::string& command, const ExperimentConfig& cfg);

}  // namespace tlc
