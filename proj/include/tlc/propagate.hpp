#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "tlc/model.hpp"
#include "tlc/synthesis.hpp"

namespace tlc {

enum class Frame { lab, rotating };

inline constexpr double kPhaseDefinedFloor = 1e-6;  // below this |rho01|, arg() is noise

// Time-sampled density-matrix evolution. The state is carried as the real
// triple (rho00, Re rho01, Im rho01); the trace is conserved by construction.
struct Trajectory {
    Frame frame = Frame::lab;
    double omega = 0.0;  // carrier removed during phase extraction (0 for rotating frame)
    std::vector<double> t;
    std::vector<double> rho00, re01, im01;
    // Extracted observables.
    std::vector<double> P_num, C_num, Phi_num;  // Phi_num is NaN where undefined
    std::vector<uint8_t> phase_defined;

    size_t size() const { return t.size(); }
    QubitState state(size_t i) const { return QubitState{rho00[i], re01[i], im01[i]}; }
    QubitState final_state() const { return state(size() - 1); }
};

double default_lab_dt(const SystemParams& params, double t_f);

// Lab-frame master equation under a real drive E(t):
//   d rho00 = 2 mu E Im(rho01) + Gamma1 - Gamma2 rho00
//   d rho01 = +i omega rho01 - i mu E (2 rho00 - 1) - Gamma_tilde rho01
// classic fixed-step RK4. Positivity drift beyond positivity_tol aborts.
Trajectory propagate_lab_field(const SystemParams& params, const NoiseRates& rates,
                               const std::function<double(double)>& e_field,
                               const QubitState& rho0, double t_f, double dt,
                               double positivity_tol = 1e-9);

Trajectory propagate_lab(const SystemParams& params, const NoiseRates& rates,
                         const ControlField& field, const QubitState& rho0, double t_f,
                         double dt = 0.0, double positivity_tol = 1e-9);

// Rotating-frame (resonant RWA) master equation under a complex envelope:
//   d rho00  = 2 mu Im(rho01 eps) + Gamma1 - Gamma2 rho00
//   d rho01  = -i mu (2 rho00 - 1) conj(eps) - Gamma_tilde rho01
Trajectory propagate_rwa_envelope(const SystemParams& params, const NoiseRates& rates,
                                  const std::function<std::complex<double>(double)>& envelope,
                                  const QubitState& rho0, double t_f, double dt,
                                  double positivity_tol = 1e-9);

Trajectory propagate_rwa(const SystemParams& params, const NoiseRates& rates,
                         const ControlField& field, const QubitState& rho0, double t_f,
                         double dt = 0.0, double positivity_tol = 1e-9);

// Interaction-picture phase series: arg(rho01 e^{-i omega t}), unwrapped so
// adjacent defined samples differ by less than pi. Samples with
// |rho01| < kPhaseDefinedFloor are marked undefined (NaN).
void extract_phase(Trajectory& traj, double omega);

struct ConvergenceResult {
    double order = 0.0;   // last Richardson estimate
    bool reliable = false;
    std::vector<double> errors;
    std::vector<double> orders;
};

// Observed integration order from successive step halvings: `run` maps a step
// size to a final state. `levels` >= 3 step sizes dt0 / 2^j are compared.
ConvergenceResult convergence_check(const std::function<QubitState(double dt)>& run, double dt0,
                                    int levels);

}  // namespace tlc
