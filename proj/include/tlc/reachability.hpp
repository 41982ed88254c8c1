#pragma once

#include <cstdint>
#include <vector>

#include "tlc/coherence.hpp"
#include "tlc/model.hpp"

namespace tlc {

// Color semantics of the transition maps:
//   invalid_initial       initial coherence too large for the initial population
//   unitary_inaccessible  closed-system C^2 goes negative (white)
//   unitary_only          closed-system ok, noisy C^2 goes negative (light gray)
//   noise_accessible      noisy C^2 stays nonnegative (dark gray; wins over light)
enum class TransitionClass : uint8_t {
    invalid_initial = 0,
    unitary_inaccessible = 1,
    unitary_only = 2,
    noise_accessible = 3,
};

const char* to_string(TransitionClass c);

// Classify one sine-squared transition Pi -> Pf over horizon t_f with n_t
// time samples of both the closed-system and the noisy coherence.
TransitionClass classify_transition(double Pi, double Pf, const NoiseRates& rates, double C0,
                                    double t_f, int n_t, double feas_tol = kDefaultFeasTol);

struct ReachabilityGrid {
    std::vector<double> Pi_axis, Pf_axis;
    std::vector<TransitionClass> cells;  // cells[i_Pi * n_Pf + i_Pf]
    // run metadata
    double gamma = 0.0, Gamma = 0.0, nbar = 0.0, C0 = 0.0, t_f = 0.0;
    int n_grid = 0, n_t = 0;
    double feas_tol = kDefaultFeasTol;

    TransitionClass at(int i_Pi, int i_Pf) const {
        return cells[static_cast<size_t>(i_Pi) * Pf_axis.size() + i_Pf];
    }
    size_t count(TransitionClass c) const;
};

// classify_transition over an n_grid x n_grid uniform grid on [0,1]^2.
// Cells are independent; rows are distributed over `workers` threads and
// gathered by index, so the result is deterministic.
ReachabilityGrid accessibility_map(const NoiseRates& rates, double C0, double t_f, int n_grid,
                                   int n_t, int workers = 0, double feas_tol = kDefaultFeasTol);

struct CurvePoint {
    double P = 0.0;
    double Cinf = 0.0;
    bool clamped = false;  // true where C_inf^2 < 0 (plotted as 0)
};

// Re C_inf over a uniform population grid; requires Gamma_tilde > 0.
std::vector<CurvePoint> asymptotic_curve(const NoiseRates& rates, int n_points);

}  // namespace tlc
