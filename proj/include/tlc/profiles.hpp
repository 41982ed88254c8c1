#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlc/errors.hpp"
#include "tlc/model.hpp"

namespace tlc {

// Population crossings of P(t) = 1/2. `whole_interval` marks the degenerate
// constant P = 1/2 profile where every time is a crossing.
struct CrossingSet {
    std::vector<double> times;
    bool whole_interval = false;
};

enum class PopulationKind { constant, sine_squared };

// User-prescribed ground-state population P(t) on [0, t_f], with an exact
// analytic derivative.
class PopulationProfile {
public:
    struct Value {
        double P;
        double Pdot;
    };

    static PopulationProfile constant(double P, double t_f);
    static PopulationProfile sine_squared(double Pi, double Pf, double t_f);

    Value eval(double t) const;
    double value(double t) const { return eval(t).P; }

    // Times where P(t) = 1/2, by closed-form inversion.
    CrossingSet crossings(double tol = 1e-12) const;

    PopulationKind kind() const { return kind_; }
    double t_f() const { return t_f_; }
    double initial() const { return Pi_; }
    double final() const { return Pf_; }

private:
    PopulationProfile() = default;
    PopulationKind kind_ = PopulationKind::constant;
    double Pi_ = 0.0;  // constant profile stores its value here
    double Pf_ = 0.0;
    double t_f_ = 0.0;
};

enum class PhaseKind { linear, quadratic, tanh_step };

// User-prescribed coherence phase Phi(t) on [0, t_f], with exact first and
// second derivatives (the second is needed at population crossings).
class PhaseProfile {
public:
    struct Value {
        double Phi;
        double Phidot;
        double Phiddot;
    };

    // Phi(t) = alpha * t
    static PhaseProfile linear(double alpha, double t_f);

    // Parabola fixed by Phi(0), Phi(t_f) and the vertex time t_vertex. When
    // t_f = 2 t_vertex those constraints are degenerate (they force
    // Phi_f = Phi_i and leave the curvature free), so the vertex value
    // Phi_vertex must be supplied instead.
    static PhaseProfile quadratic(double Phi_i, double Phi_f, double t_vertex, double t_f,
                                  std::optional<double> Phi_vertex = std::nullopt);

    // Phi(t) = (Phi_f-Phi_i)/2 * tanh(beta t + chi) + (Phi_f+Phi_i)/2 with
    // chi = atanh(sigma) - beta*t_ref, sigma = (1-Phi_f-Phi_i)/(Phi_f-Phi_i).
    // t_ref is the time at which the profile passes the value 1/2 rad.
    static PhaseProfile tanh_step(double Phi_i, double Phi_f, double beta, double t_ref,
                                  double t_f);

    Value eval(double t) const;
    double value(double t) const { return eval(t).Phi; }
    double slope(double t) const { return eval(t).Phidot; }

    PhaseKind kind() const { return kind_; }
    double t_f() const { return t_f_; }

private:
    PhaseProfile() = default;
    PhaseKind kind_ = PhaseKind::linear;
    double t_f_ = 0.0;
    // linear
    double alpha_ = 0.0;
    // quadratic: Phi = Phi_i + c2 * t * (t - 2 t_vertex)
    double Phi_i_ = 0.0;
    double c2_ = 0.0;
    double t_vertex_ = 0.0;
    // tanh
    double half_swing_ = 0.0;  // (Phi_f - Phi_i) / 2
    double mid_ = 0.0;         // (Phi_f + Phi_i) / 2
    double beta_ = 0.0;
    double chi_ = 0.0;
};

// Constraint report for a (P, Phi) pair: population crossings, whether the
// phase slope vanishes there (within phase_tol), and whether P(t) stays in
// the closed-system band [1/2 - sqrt(1/4-k), 1/2 + sqrt(1/4-k)].
struct PrescriptionReport {
    CrossingSet crossings;
    std::vector<bool> phase_constraint_ok;  // one entry per crossing time
    bool unitary_band_ok = true;
    std::vector<std::pair<double, std::string>> violations;
    double phase_tol = 0.0;

    bool phase_ok() const {
        for (bool ok : phase_constraint_ok)
            if (!ok) return false;
        return true;
    }
};

inline constexpr double kDefaultPhaseTol = 1e-4;  // rad / time

PrescriptionReport validate_prescription(const PopulationProfile& pop, const PhaseProfile& phase,
                                         MixednessConstant k, const NoiseRates& rates,
                                         double phase_tol = kDefaultPhaseTol);

}  // namespace tlc
