#include "tlc/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tlc {

namespace {

bool same_number(double a, double b) { return a == b; }

}  // namespace

double ControlField::drive_numerator(double P, double Pdot) const {
    if (opts_.swap_thermal_rates) return Pdot + rates_.Gamma1 * P - rates_.Gamma2;
    return Pdot + rates_.Gamma2 * P - rates_.Gamma1;
}

double ControlField::quad_x(double t, bool allow_guard) const {
    const auto pv = pop_.eval(t);
    const double C = coh_.value(t);
    const double num = drive_numerator(pv.P, pv.Pdot);
    if (C > opts_.c_floor) return num / (2.0 * C);
    if (!allow_guard) {
        throw SingularFieldError("field singular: C(t) below floor at t = " + std::to_string(t),
                                 t, t);
    }
    if (std::abs(num) > opts_.num_floor) {
        const double d = 1e-3 * t_f();
        throw SingularFieldError(
            "field singular near t = " + std::to_string(t) +
                ": C -> 0 while the population drive (Pdot + Gamma2 P - Gamma1) = " +
                std::to_string(num) + " does not vanish",
            std::max(0.0, t - d), std::min(t_f(), t + d));
    }
    // 0/0 point (e.g. Pi = 1 start): one-sided Richardson limit into the domain.
    const double d = 1e-3 * t_f();
    const double s = (t < 0.5 * t_f()) ? 1.0 : -1.0;
    const double x1 = quad_x(t + s * d, false);
    const double x2 = quad_x(t + s * 0.5 * d, false);
    return 2.0 * x2 - x1;
}

double ControlField::quad_y(double t, bool allow_guard) const {
    const auto pv = pop_.eval(t);
    const auto ph = phase_.eval(t);
    const double C = coh_.value(t);
    const double den = 2.0 * pv.P - 1.0;
    if (std::abs(den) > opts_.p_floor) return C * ph.Phidot / den;
    if (!allow_guard) {
        throw SingularFieldError("field singular: population crossing at t = " +
                                     std::to_string(t),
                                 t, t);
    }
    if (std::abs(C * ph.Phidot) > opts_.num_floor) {
        const double d = 1e-3 * t_f();
        throw SingularFieldError(
            "field singular near the population crossing t = " + std::to_string(t) +
                ": C*Phidot = " + std::to_string(C * ph.Phidot) + " does not vanish there",
            std::max(0.0, t - d), std::min(t_f(), t + d));
    }
    // Simple crossing: l'Hopital, d(C Phidot)/dt over d(2P-1)/dt.
    if (std::abs(2.0 * pv.Pdot) > opts_.p_floor) {
        const double Cdot = C > opts_.c_floor ? coh_.csq_rate(t) / (2.0 * C) : 0.0;
        return (C * ph.Phiddot + Cdot * ph.Phidot) / (2.0 * pv.Pdot);
    }
    // Degenerate crossing (endpoint of a sine-squared ramp, or constant
    // P = 1/2): one-sided limit if a neighbouring point is regular, else the
    // prescription carries no phase motion and the quadrature is null.
    const double d = 1e-3 * t_f();
    const double s = (t < 0.5 * t_f()) ? 1.0 : -1.0;
    const double tp1 = t + s * d, tp2 = t + s * 0.5 * d;
    if (std::abs(2.0 * pop_.value(tp1) - 1.0) > opts_.p_floor &&
        std::abs(2.0 * pop_.value(tp2) - 1.0) > opts_.p_floor) {
        return 2.0 * quad_y(tp2, false) - quad_y(tp1, false);
    }
    return 0.0;
}

ControlField::Point ControlField::point(double t) const {
    const auto pv = pop_.eval(t);
    const auto ph = phase_.eval(t);
    Point p;
    p.P = pv.P;
    p.Pdot = pv.Pdot;
    p.Phi = ph.Phi;
    p.Phidot = ph.Phidot;
    p.C = coh_.value(t);
    p.X = quad_x(t, true);
    p.Y = quad_y(t, true);
    return p;
}

double ControlField::e_field(double t) const {
    const Point p = point(t);
    const double theta = params_.omega * t + p.Phi;
    return (2.0 / params_.mu) * (p.X * std::sin(theta) - p.Y * std::cos(theta));
}

double ControlField::envelope(double t) const { return sample(t).A; }

double ControlField::chirp(double t) const { return sample(t).Lambda; }

FieldSample ControlField::sample(double t) const {
    const Point p = point(t);
    const double h = std::hypot(p.X, p.Y);
    const double den = 2.0 * p.P - 1.0;
    // Lambda = atan2(C Phidot, Cdot + Gamma_tilde C); since the governing
    // equation gives Cdot + Gt C = -(2P-1) X and C Phidot = (2P-1) Y, the
    // quadrant only depends on the sign of (2P-1). The envelope sign is the
    // one that keeps A sin(omega t + Phi + Lambda) identical to the
    // quadrature form at every point.
    double A, Lambda;
    if (den > 0.0) {
        Lambda = std::atan2(p.Y, -p.X);
        A = -(2.0 / params_.mu) * h;
    } else {
        Lambda = std::atan2(-p.Y, p.X);
        A = (2.0 / params_.mu) * h;
    }
    const double theta = params_.omega * t + p.Phi;
    const double E = (2.0 / params_.mu) * (p.X * std::sin(theta) - p.Y * std::cos(theta));
    return FieldSample{t, E, A, Lambda, p.X, p.Y};
}

std::vector<FieldSample> ControlField::sample_waveform(int n) const {
    if (n < 2) throw DomainError("sample_waveform: need at least 2 samples");
    std::vector<FieldSample> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = t_f() * static_cast<double>(i) / (n - 1);
        out.push_back(sample(t));
    }
    return out;
}

std::complex<double> ControlField::rwa_envelope(double t) const {
    const Point p = point(t);
    const std::complex<double> amp(-p.Y, p.X);
    return amp * std::exp(std::complex<double>(0.0, -p.Phi)) / params_.mu;
}

ControlField synthesize(const PopulationProfile& pop, const PhaseProfile& phase,
                        const CoherenceSolution& coh, const SystemParams& params,
                        const NoiseRates& rates, const SynthesisOptions& opts) {
    params.validate();
    if (!same_number(params.omega_p, params.omega)) {
        throw DomainError("synthesize: the inversion is derived on resonance (omega_p = omega)");
    }
    if (!same_number(pop.t_f(), phase.t_f()) || !same_number(pop.t_f(), coh.t_f())) {
        throw DomainError("synthesize: population, phase and coherence must share t_f");
    }
    if (!same_number(coh.rates().gamma, rates.gamma) ||
        !same_number(coh.rates().Gamma, rates.Gamma) ||
        !same_number(coh.rates().nbar, rates.nbar)) {
        throw DomainError("synthesize: coherence solution was built for different rates");
    }
    if (coh.profile().kind() != pop.kind() || !same_number(coh.profile().initial(), pop.initial()) ||
        !same_number(coh.profile().final(), pop.final())) {
        throw DomainError("synthesize: coherence solution was built for a different profile");
    }

    PrescriptionReport report = validate_prescription(
        pop, phase, MixednessConstant{coh.k()}, rates, opts.phase_tol);

    bool forced = false;
    if (!coh.feasible()) {
        if (!opts.force) {
            throw InfeasibleError("synthesize: prescription infeasible, min C^2 = " +
                                  std::to_string(coh.min_csq()) + " < -feas_tol");
        }
        forced = true;
    }
    if (!report.phase_ok()) {
        if (!opts.force) {
            std::string msg = "synthesize: phase constraint violated";
            if (!report.violations.empty()) {
                msg += " at t* = " + std::to_string(report.violations.front().first) + " (" +
                       report.violations.front().second + ")";
            }
            throw InfeasibleError(msg);
        }
        forced = true;
    }

    return ControlField(pop, phase, coh, params, rates, opts, std::move(report), forced);
}

}  // namespace tlc
