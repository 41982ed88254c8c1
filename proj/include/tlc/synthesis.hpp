#pragma once

#include <complex>
#include <vector>

#include "tlc/coherence.hpp"
#include "tlc/model.hpp"
#include "tlc/profiles.hpp"

namespace tlc {

struct SynthesisOptions {
    bool force = false;          // synthesize even if validation flagged the prescription
    double phase_tol = kDefaultPhaseTol;
    double c_floor = 1e-9;       // below this C, the X quadrature needs a vanishing numerator
    double num_floor = 1e-9;     // how small "vanishing" means
    double p_floor = 1e-9;       // |2P-1| guard for the Y quadrature at crossings
    // Reproduce the typo'd thermal-rate order (Pdot + Gamma1 P - Gamma2) in the
    // field numerator; tracking fails loudly for Gamma > 0 under this variant.
    bool swap_thermal_rates = false;
};

struct FieldSample {
    double t, E, A, Lambda, X, Y;
};

// The synthesized control pulse. Primary representation is the quadrature
// pair (X, Y):
//   E(t) = (2/mu) [X sin(omega t + Phi) - Y cos(omega t + Phi)],
//   X = (Pdot + Gamma2 P - Gamma1) / (2C),  Y = C Phidot / (2P - 1).
// The sinusoidal form E = A sin(omega t + Phi + Lambda) is derived from the
// same pair and exported for reporting.
class ControlField {
public:
    struct Point {
        double P, Pdot, Phi, Phidot, C;
        double X, Y;
    };

    double e_field(double t) const;
    Point point(double t) const;
    double envelope(double t) const;  // signed A(t)
    double chirp(double t) const;     // Lambda(t)
    FieldSample sample(double t) const;
    std::vector<FieldSample> sample_waveform(int n) const;

    // Complex rotating-frame envelope, eps(t) = (-Y + iX) e^{-i Phi} / mu.
    std::complex<double> rwa_envelope(double t) const;

    double t_f() const { return pop_.t_f(); }
    const SystemParams& params() const { return params_; }
    const NoiseRates& rates() const { return rates_; }
    const PopulationProfile& population() const { return pop_; }
    const PhaseProfile& phase() const { return phase_; }
    const CoherenceSolution& coherence() const { return coh_; }
    bool forced() const { return forced_; }
    const PrescriptionReport& report() const { return report_; }

private:
    friend ControlField synthesize(const PopulationProfile&, const PhaseProfile&,
                                   const CoherenceSolution&, const SystemParams&,
                                   const NoiseRates&, const SynthesisOptions&);
    ControlField(PopulationProfile pop, PhaseProfile phase, CoherenceSolution coh,
                 SystemParams params, NoiseRates rates, SynthesisOptions opts,
                 PrescriptionReport report, bool forced)
        : pop_(pop), phase_(phase), coh_(coh), params_(params), rates_(rates), opts_(opts),
          report_(std::move(report)), forced_(forced) {}

    double quad_x(double t, bool allow_guard) const;
    double quad_y(double t, bool allow_guard) const;
    double drive_numerator(double P, double Pdot) const;

    PopulationProfile pop_;
    PhaseProfile phase_;
    CoherenceSolution coh_;
    SystemParams params_;
    NoiseRates rates_;
    SynthesisOptions opts_;
    PrescriptionReport report_;
    bool forced_ = false;
};

// Inverts the equations of motion for the prescribed (P, Phi, C). Refuses
// infeasible coherence and phase-constraint violations unless opts.force.
ControlField synthesize(const PopulationProfile& pop, const PhaseProfile& phase,
                        const CoherenceSolution& coh, const SystemParams& params,
                        const NoiseRates& rates, const SynthesisOptions& opts = {});

}  // namespace tlc
