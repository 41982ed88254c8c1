#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace tlc {

// A bundled experiment reproducing one panel of the reference figures, with
// every editorial parameter choice spelled out in the config itself.
struct FigureConfig {
    std::string label;    // e.g. "fig3b"
    std::string command;  // natural subcommand: track / reach / steady / coherence
    nlohmann::json config;
};

// Figure ids: "1", "2", "3", "3a".."3i", "4", "4a".."4i", "5", "6", "7",
// "7a", "7b", "8". Composite ids ("3", "4", "7") expand to their panels.
std::vector<FigureConfig> figure_bundle(const std::string& id);

std::vector<std::string> figure_ids();

// The four pulse-tracking scenarios (figures 2, 5, 6, 8).
std::vector<FigureConfig> tracking_figures();

}  // namespace tlc
