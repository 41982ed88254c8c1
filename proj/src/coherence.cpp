#include "tlc/coherence.hpp"

#include <cmath>
#include <string>

#include "tlc/quadrature.hpp"

namespace tlc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// f1 = (e^{2 Gt t} - 1) / (2 Gt), exact at Gt = 0.
double f1_of(double Gt, double t) {
    if (Gt == 0.0) return t;
    return std::expm1(2.0 * Gt * t) / (2.0 * Gt);
}

// f_cos(a) = int_0^t cos(a t') e^{2 Gt t'} dt'
//          = [e^{2 Gt t}(2 Gt cos(a t) + a sin(a t)) - 2 Gt] / (4 Gt^2 + a^2).
// This is the corrected antiderivative: the trailing constant 2 Gt is NOT
// multiplied by e^{2 Gt t} (differentiating confirms, and the value vanishes
// at t = 0).
double fcos_of(double Gt, double a, double t) {
    const double e = std::exp(2.0 * Gt * t);
    return (e * (2.0 * Gt * std::cos(a * t) + a * std::sin(a * t)) - 2.0 * Gt) /
           (4.0 * Gt * Gt + a * a);
}

// Damped counterparts g_i = e^{-2 Gt t} f_i; free of large exponentials, so
// the coherence formula stays conditioned for any Gt * t.
double g1_of(double Gt, double t) {
    if (Gt == 0.0) return t;
    return -std::expm1(-2.0 * Gt * t) / (2.0 * Gt);
}

double gcos_of(double Gt, double a, double t) {
    const double e = std::exp(-2.0 * Gt * t);
    return (2.0 * Gt * std::cos(a * t) + a * std::sin(a * t) - 2.0 * Gt * e) /
           (4.0 * Gt * Gt + a * a);
}

void check_span(double t, double t_f, const char* who) {
    if (!(t >= 0.0 && t <= t_f)) {
        throw DomainError(std::string(who) + ": t outside [0, t_f]");
    }
}

// e^{-2 Gt t} * [Gt1 I1 + Gt2 I2] for the sine-squared profile, damped form.
double damped_integral_term_sine_squared(const NoiseRates& r, double Pi, double Pf, double t_f,
                                         double t) {
    const double Gt = r.Gamma_tilde;
    const double dP = Pf - Pi;
    const double a1 = kPi / t_f;
    const double a2 = 2.0 * kPi / t_f;
    const double g1 = g1_of(Gt, t);
    const double g2 = gcos_of(Gt, a1, t);
    const double g3 = gcos_of(Gt, a2, t);
    const double i1 = Pi * g1 + 0.5 * dP * (g1 - g2);
    const double i2 = Pi * Pi * g1 + Pi * dP * (g1 - g2) +
                      dP * dP * (0.375 * g1 - 0.5 * g2 + 0.125 * g3);
    return r.Gamma_tilde1 * i1 + r.Gamma_tilde2 * i2;
}

// Quadrature route, written as int_0^t P^m(t - s) e^{-2 Gt s} ds so no large
// exponential ever appears.
double damped_integral_term_quadrature(const PopulationProfile& pop, const NoiseRates& r,
                                       double t) {
    if (t == 0.0) return 0.0;
    const double Gt = r.Gamma_tilde;
    QuadratureOptions q;
    const auto j1 = integrate_adaptive(
        [&](double s) { return pop.value(t - s) * std::exp(-2.0 * Gt * s); }, 0.0, t, q);
    const auto j2 = integrate_adaptive(
        [&](double s) {
            const double P = pop.value(t - s);
            return P * P * std::exp(-2.0 * Gt * s);
        },
        0.0, t, q);
    return r.Gamma_tilde1 * j1.value + r.Gamma_tilde2 * j2.value;
}

}  // namespace

double coherence_ode_rhs(double P, double Pdot, const NoiseRates& rates, double Csq) {
    return (1.0 - 2.0 * P) * (Pdot + rates.Gamma2 * P - rates.Gamma1) -
           2.0 * rates.Gamma_tilde * Csq;
}

double integral_I1_sine_squared(const NoiseRates& rates, double Pi, double Pf, double t_f,
                                double t) {
    check_span(t, t_f, "integral_I1_sine_squared");
    const double Gt = rates.Gamma_tilde;
    const double f1 = f1_of(Gt, t);
    const double f2 = fcos_of(Gt, kPi / t_f, t);
    return Pi * f1 + 0.5 * (Pf - Pi) * (f1 - f2);
}

double integral_I2_sine_squared(const NoiseRates& rates, double Pi, double Pf, double t_f,
                                double t) {
    check_span(t, t_f, "integral_I2_sine_squared");
    const double Gt = rates.Gamma_tilde;
    const double dP = Pf - Pi;
    const double f1 = f1_of(Gt, t);
    const double f2 = fcos_of(Gt, kPi / t_f, t);
    const double f3 = fcos_of(Gt, 2.0 * kPi / t_f, t);
    const double h1 = dP * dP * (0.375 * f1 - 0.5 * f2 + 0.125 * f3);
    const double h2 = Pi * dP * (f1 - f2);
    return Pi * Pi * f1 + h1 + h2;
}

double lambda_constant(double P, const NoiseRates& rates) {
    if (rates.Gamma_tilde == 0.0) return 0.0;
    return rates.gamma_tilde -
           P * (rates.Gamma_tilde1 + P * rates.Gamma_tilde2) / (2.0 * rates.Gamma_tilde);
}

double asymptotic_coherence_sq(double P, const NoiseRates& rates) {
    return P - P * P - lambda_constant(P, rates);
}

AsymptoticCoherence asymptotic_coherence(double P, const NoiseRates& rates) {
    if (!(rates.Gamma_tilde > 0.0)) {
        throw DomainError("asymptotic_coherence: requires Gamma_tilde > 0");
    }
    AsymptoticCoherence out;
    out.Csq = asymptotic_coherence_sq(P, rates);
    out.feasible = out.Csq >= 0.0;
    out.Cinf = out.feasible ? std::sqrt(out.Csq) : 0.0;
    return out;
}

double coherence_unitary_sq(double P, double k) { return P - P * P - k; }

double coherence_constant_population_sq(double P, const NoiseRates& rates, double k, double t) {
    if (rates.Gamma_tilde == 0.0) return coherence_unitary_sq(P, k);
    const double lam = lambda_constant(P, rates);
    const double cinf_sq = P - P * P - lam;
    return cinf_sq + (lam - k) * std::exp(-2.0 * rates.Gamma_tilde * t);
}

SteadyState steady_state_coherence(double P, const NoiseRates& rates) {
    if (!(rates.Gamma_tilde > 0.0)) {
        throw DomainError("steady_state_coherence: requires Gamma_tilde > 0");
    }
    SteadyState out;
    out.k = lambda_constant(P, rates);
    const double csq = asymptotic_coherence_sq(P, rates);
    // Under pure dephasing the only constant-coherence states are the trivial
    // C = 0 populations; nontrivial steady coherence needs thermal drive.
    out.feasible = rates.Gamma > 0.0 && csq >= 0.0 && out.k >= 0.0 && out.k <= 0.25;
    out.C0 = csq > 0.0 ? std::sqrt(csq) : 0.0;
    return out;
}

const char* to_string(CoherenceMethod m) {
    switch (m) {
        case CoherenceMethod::closed_constant: return "closed_constant";
        case CoherenceMethod::closed_sine_squared: return "closed_sine_squared";
        case CoherenceMethod::unitary: return "unitary";
        case CoherenceMethod::quadrature: return "quadrature";
    }
    return "?";
}

CoherenceSolution::CoherenceSolution(PopulationProfile pop, NoiseRates rates, double C0, double k,
                                     CoherenceMethod method, double feas_tol)
    : pop_(pop), rates_(rates), C0_(C0), k_(k), method_(method), feas_tol_(feas_tol) {}

CoherenceSolution CoherenceSolution::solve(const PopulationProfile& pop, const NoiseRates& rates,
                                           double C0, const CoherenceOptions& opts) {
    const MixednessConstant k = mixedness_constant(pop.value(0.0), C0);

    CoherenceMethod method;
    if (opts.force_quadrature) {
        method = CoherenceMethod::quadrature;
    } else if (rates.zero()) {
        method = CoherenceMethod::unitary;
    } else if (pop.kind() == PopulationKind::constant) {
        method = CoherenceMethod::closed_constant;
    } else if (pop.kind() == PopulationKind::sine_squared) {
        method = CoherenceMethod::closed_sine_squared;
    } else if (opts.allow_quadrature) {
        method = CoherenceMethod::quadrature;
    } else {
        throw CapabilityError(
            "CoherenceSolution: no closed form for this profile and quadrature is disabled");
    }

    CoherenceSolution sol(pop, rates, C0, k.k, method, opts.feas_tol);

    const int n = std::max(2, opts.feas_grid);
    double min_csq = sol.csq(0.0);
    for (int i = 1; i < n; ++i) {
        const double t = pop.t_f() * static_cast<double>(i) / (n - 1);
        min_csq = std::min(min_csq, sol.csq(t));
    }
    sol.min_csq_ = min_csq;
    sol.feasible_ = min_csq >= -opts.feas_tol;
    return sol;
}

double CoherenceSolution::csq(double t) const {
    check_span(t, pop_.t_f(), "CoherenceSolution::csq");
    const double P = pop_.value(t);
    switch (method_) {
        case CoherenceMethod::unitary:
            return coherence_unitary_sq(P, k_);
        case CoherenceMethod::closed_constant:
            return coherence_constant_population_sq(P, rates_, k_, t);
        case CoherenceMethod::closed_sine_squared: {
            const double e = std::exp(-2.0 * rates_.Gamma_tilde * t);
            return (P - P * P) + e * (rates_.gamma_tilde - k_) - rates_.gamma_tilde +
                   damped_integral_term_sine_squared(rates_, pop_.initial(), pop_.final(),
                                                     pop_.t_f(), t);
        }
        case CoherenceMethod::quadrature: {
            const double e = std::exp(-2.0 * rates_.Gamma_tilde * t);
            return (P - P * P) + e * (rates_.gamma_tilde - k_) - rates_.gamma_tilde +
                   damped_integral_term_quadrature(pop_, rates_, t);
        }
    }
    throw DomainError("CoherenceSolution::csq: unknown method");
}

double CoherenceSolution::value(double t) const {
    const double c2 = csq(t);
    return c2 > 0.0 ? std::sqrt(c2) : 0.0;
}

double CoherenceSolution::csq_rate(double t) const {
    const auto pv = pop_.eval(t);
    return coherence_ode_rhs(pv.P, pv.Pdot, rates_, csq(t));
}

double coherence_general(const PopulationProfile& pop, const NoiseRates& rates, double C0,
                         double t, const CoherenceOptions& opts) {
    CoherenceOptions o = opts;
    o.feas_grid = 2;  // caller asked for a point value, skip the dense scan
    return CoherenceSolution::solve(pop, rates, C0, o).csq(t);
}

}  // namespace tlc
