#pragma once

#include <string>
#include <vector>

#include "tlc/propagate.hpp"
#include "tlc/reachability.hpp"
#include "tlc/synthesis.hpp"

namespace tlc {

// 17 significant digits; round-trips any double exactly.
std::string format_g17(double v);

void write_waveform_csv(const std::string& path, const std::vector<FieldSample>& samples);

// Header "t,P_num,C_num,Phi_num,rho01_re,rho01_im"; at most n_samples rows,
// uniformly thinned from the stored trajectory (0 keeps every stored step).
void write_trajectory_csv(const std::string& path, const Trajectory& traj, int n_samples = 0);

// Header "Pi,Pf,class" with class in {0,1,2,3}; Pi-major row order.
void write_grid_csv(const std::string& path, const ReachabilityGrid& grid);

// Binary PGM (P5), 8-bit. Gray levels: 255 white (unitary-inaccessible),
// 170 light (unitary only), 85 dark (noise-accessible), 0 invalid initial
// state. Row 0 is Pf = 1 (image convention, documented in the header comment).
void write_grid_pgm(const std::string& path, const ReachabilityGrid& grid);

void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve);

struct SteadyRow {
    double P, Cinf, required_C0, k;
    bool feasible;
};
void write_steady_csv(const std::string& path, const std::vector<SteadyRow>& rows);

}  // namespace tlc
