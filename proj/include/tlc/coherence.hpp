#pragma once

#include <memory>

#include "tlc/model.hpp"
#include "tlc/profiles.hpp"

namespace tlc {

// Right-hand side of the coherence-modulus equation,
//   d(C^2)/dt = (1 - 2P)(Pdot + Gamma2 P - Gamma1) - 2 Gamma_tilde C^2.
// This is the verification oracle for every closed form below.
double coherence_ode_rhs(double P, double Pdot, const NoiseRates& rates, double Csq);

// Closed-form weighted integrals for the sine-squared profile:
//   I1 = int_0^t P(t') exp(2 Gamma_tilde t') dt',  I2 = same with P^2.
double integral_I1_sine_squared(const NoiseRates& rates, double Pi, double Pf, double t_f,
                                double t);
double integral_I2_sine_squared(const NoiseRates& rates, double Pi, double Pf, double t_f,
                                double t);

// lambda(P) = gamma_tilde - P (Gamma_tilde1 + P Gamma_tilde2) / (2 Gamma_tilde).
double lambda_constant(double P, const NoiseRates& rates);

// C_inf^2 = P - P^2 - lambda(P); may be negative (then no coherence can be
// sustained at that constant population).
double asymptotic_coherence_sq(double P, const NoiseRates& rates);

struct AsymptoticCoherence {
    double Cinf = 0.0;   // sqrt(max(Csq, 0))
    double Csq = 0.0;    // the raw value, sign intact
    bool feasible = true;
};

// Requires Gamma_tilde > 0.
AsymptoticCoherence asymptotic_coherence(double P, const NoiseRates& rates);

// Closed-system coherence, C^2 = P - P^2 - k.
double coherence_unitary_sq(double P, double k);

// Constant-population coherence, C^2 = C_inf^2 + (lambda(P) - k) e^{-2 Gamma_tilde t}.
double coherence_constant_population_sq(double P, const NoiseRates& rates, double k, double t);

struct SteadyState {
    double C0 = 0.0;  // initial (and permanent) coherence modulus
    double k = 0.0;   // the matching mixedness constant, k = lambda(P)
    bool feasible = false;
};

// The C(0) making C(t) constant at population P (k = lambda(P)), when that
// state exists. Requires Gamma_tilde > 0.
SteadyState steady_state_coherence(double P, const NoiseRates& rates);

enum class CoherenceMethod { closed_constant, closed_sine_squared, unitary, quadrature };

const char* to_string(CoherenceMethod m);

inline constexpr double kDefaultFeasTol = 1e-12;

struct CoherenceOptions {
    bool force_quadrature = false;   // bypass closed forms (testing / new profiles)
    bool allow_quadrature = true;    // profiles without closed form fall back to quadrature
    int feas_grid = 2001;            // grid for the min C^2 feasibility scan
    double feas_tol = kDefaultFeasTol;
};

// The coherence modulus implied by a population prescription and the initial
// coherence C0; evaluable C^2(t) and C(t) on [0, t_f].
class CoherenceSolution {
public:
    static CoherenceSolution solve(const PopulationProfile& pop, const NoiseRates& rates,
                                   double C0, const CoherenceOptions& opts = {});

    double csq(double t) const;
    double value(double t) const;     // sqrt(max(C^2, 0))
    double csq_rate(double t) const;  // d(C^2)/dt through the governing equation

    CoherenceMethod method() const { return method_; }
    double min_csq() const { return min_csq_; }
    bool feasible() const { return feasible_; }
    double k() const { return k_; }
    double C0() const { return C0_; }
    double t_f() const { return pop_.t_f(); }
    const PopulationProfile& profile() const { return pop_; }
    const NoiseRates& rates() const { return rates_; }
    double feas_tol() const { return feas_tol_; }

private:
    CoherenceSolution(PopulationProfile pop, NoiseRates rates, double C0, double k,
                      CoherenceMethod method, double feas_tol);

    PopulationProfile pop_;
    NoiseRates rates_;
    double C0_ = 0.0;
    double k_ = 0.0;
    CoherenceMethod method_ = CoherenceMethod::unitary;
    double min_csq_ = 0.0;
    bool feasible_ = true;
    double feas_tol_ = kDefaultFeasTol;
};

// One-shot evaluation of the general solution (exponential ansatz plus the
// I1/I2 integrals); used by tests and thin callers.
double coherence_general(const PopulationProfile& pop, const NoiseRates& rates, double C0,
                         double t, const CoherenceOptions& opts = {});

}  // namespace tlc
