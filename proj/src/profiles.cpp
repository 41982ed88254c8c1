#include "tlc/profiles.hpp"

#include <algorithm>
#include <cmath>

namespace tlc {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_time(double t, double t_f, const char* who) {
    if (!(t >= 0.0 && t <= t_f)) {
        throw DomainError(std::string(who) + ": t = " + std::to_string(t) +
                          " outside [0, " + std::to_string(t_f) + "]");
    }
}

void check_horizon(double t_f, const char* who) {
    if (!(t_f > 0.0)) throw DomainError(std::string(who) + ": t_f must be > 0");
}

void check_unit(double v, const char* who, const char* name) {
    if (v < 0.0 || v > 1.0) {
        throw DomainError(std::string(who) + ": " + name + " must lie in [0,1]");
    }
}

}  // namespace

PopulationProfile PopulationProfile::constant(double P, double t_f) {
    check_horizon(t_f, "PopulationProfile::constant");
    check_unit(P, "PopulationProfile::constant", "P");
    PopulationProfile p;
    p.kind_ = PopulationKind::constant;
    p.Pi_ = p.Pf_ = P;
    p.t_f_ = t_f;
    return p;
}

PopulationProfile PopulationProfile::sine_squared(double Pi, double Pf, double t_f) {
    check_horizon(t_f, "PopulationProfile::sine_squared");
    check_unit(Pi, "PopulationProfile::sine_squared", "Pi");
    check_unit(Pf, "PopulationProfile::sine_squared", "Pf");
    PopulationProfile p;
    p.kind_ = PopulationKind::sine_squared;
    p.Pi_ = Pi;
    p.Pf_ = Pf;
    p.t_f_ = t_f;
    return p;
}

PopulationProfile::Value PopulationProfile::eval(double t) const {
    check_time(t, t_f_, "PopulationProfile::eval");
    if (kind_ == PopulationKind::constant) return {Pi_, 0.0};
    const double b = kPi / (2.0 * t_f_);
    const double s = std::sin(b * t);
    const double dP = Pf_ - Pi_;
    return {dP * s * s + Pi_, dP * b * std::sin(kPi * t / t_f_)};
}

CrossingSet PopulationProfile::crossings(double tol) const {
    if (!(tol > 0.0)) throw DomainError("PopulationProfile::crossings: tol must be > 0");
    CrossingSet out;
    if (kind_ == PopulationKind::constant || Pi_ == Pf_) {
        out.whole_interval = std::abs(Pi_ - 0.5) <= tol;
        return out;
    }
    // (Pf-Pi) sin^2(pi t / 2 t_f) + Pi = 1/2  =>  sin^2 = r
    const double r = (0.5 - Pi_) / (Pf_ - Pi_);
    if (r < 0.0 || r > 1.0) return out;
    out.times.push_back(2.0 * t_f_ / kPi * std::asin(std::sqrt(r)));
    return out;
}

PhaseProfile PhaseProfile::linear(double alpha, double t_f) {
    check_horizon(t_f, "PhaseProfile::linear");
    PhaseProfile p;
    p.kind_ = PhaseKind::linear;
    p.alpha_ = alpha;
    p.t_f_ = t_f;
    return p;
}

PhaseProfile PhaseProfile::quadratic(double Phi_i, double Phi_f, double t_vertex, double t_f,
                                     std::optional<double> Phi_vertex) {
    check_horizon(t_f, "PhaseProfile::quadratic");
    PhaseProfile p;
    p.kind_ = PhaseKind::quadratic;
    p.t_f_ = t_f;
    p.Phi_i_ = Phi_i;
    p.t_vertex_ = t_vertex;
    const double denom = t_f * (t_f - 2.0 * t_vertex);
    const bool degenerate = std::abs(t_f - 2.0 * t_vertex) <= 1e-12 * t_f;
    if (degenerate) {
        // Vertex at midpoint: the endpoint pair only closes if Phi_f = Phi_i,
        // and the curvature must come from the vertex value.
        if (std::abs(Phi_f - Phi_i) > 1e-12 * std::max(1.0, std::abs(Phi_f) + std::abs(Phi_i))) {
            throw DomainError(
                "PhaseProfile::quadratic: vertex at t_f/2 requires Phi_f = Phi_i");
        }
        if (!Phi_vertex) {
            throw DomainError(
                "PhaseProfile::quadratic: vertex at t_f/2 leaves the curvature free; "
                "supply Phi_vertex");
        }
        p.c2_ = (Phi_i - *Phi_vertex) / (t_vertex * t_vertex);
    } else {
        if (Phi_vertex) {
            throw DomainError(
                "PhaseProfile::quadratic: Phi_vertex is only accepted when the vertex "
                "sits at t_f/2");
        }
        p.c2_ = (Phi_f - Phi_i) / denom;
    }
    return p;
}

PhaseProfile PhaseProfile::tanh_step(double Phi_i, double Phi_f, double beta, double t_ref,
                                     double t_f) {
    check_horizon(t_f, "PhaseProfile::tanh_step");
    if (!(beta > 0.0)) throw DomainError("PhaseProfile::tanh_step: beta must be > 0");
    if (Phi_f == Phi_i) throw DomainError("PhaseProfile::tanh_step: Phi_f must differ from Phi_i");
    const double sigma = (1.0 - Phi_f - Phi_i) / (Phi_f - Phi_i);
    if (!(std::abs(sigma) < 1.0)) {
        throw DomainError("PhaseProfile::tanh_step: |sigma| = " + std::to_string(std::abs(sigma)) +
                          " >= 1, offset chi does not exist");
    }
    PhaseProfile p;
    p.kind_ = PhaseKind::tanh_step;
    p.t_f_ = t_f;
    p.half_swing_ = 0.5 * (Phi_f - Phi_i);
    p.mid_ = 0.5 * (Phi_f + Phi_i);
    p.beta_ = beta;
    p.chi_ = 0.5 * std::log((1.0 + sigma) / (1.0 - sigma)) - beta * t_ref;
    return p;
}

PhaseProfile::Value PhaseProfile::eval(double t) const {
    check_time(t, t_f_, "PhaseProfile::eval");
    switch (kind_) {
        case PhaseKind::linear:
            return {alpha_ * t, alpha_, 0.0};
        case PhaseKind::quadratic:
            // Phi = Phi_i + c2 t (t - 2 t_v); slope written around the vertex
            // so it vanishes there exactly.
            return {Phi_i_ + c2_ * t * (t - 2.0 * t_vertex_), 2.0 * c2_ * (t - t_vertex_),
                    2.0 * c2_};
        case PhaseKind::tanh_step: {
            const double z = beta_ * t + chi_;
            const double th = std::tanh(z);
            const double sech2 = 1.0 - th * th;
            return {half_swing_ * th + mid_, half_swing_ * beta_ * sech2,
                    -2.0 * half_swing_ * beta_ * beta_ * sech2 * th};
        }
    }
    throw DomainError("PhaseProfile::eval: unknown kind");
}

PrescriptionReport validate_prescription(const PopulationProfile& pop, const PhaseProfile& phase,
                                         MixednessConstant k, const NoiseRates& rates,
                                         double phase_tol) {
    (void)rates;  // the band test below is the closed-system statement; rates
                  // only matter for the coherence solution, checked separately
    if (std::abs(pop.t_f() - phase.t_f()) > 1e-9 * pop.t_f()) {
        throw DomainError("validate_prescription: population and phase profiles must share t_f");
    }
    PrescriptionReport rep;
    rep.phase_tol = phase_tol;
    rep.crossings = pop.crossings();

    if (rep.crossings.whole_interval) {
        // Constant P = 1/2: the phase slope must vanish everywhere.
        const int n = 10001;
        double worst = 0.0, worst_t = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = pop.t_f() * static_cast<double>(i) / (n - 1);
            const double pd = std::abs(phase.slope(t));
            if (pd > worst) {
                worst = pd;
                worst_t = t;
            }
        }
        rep.phase_constraint_ok.push_back(worst <= phase_tol);
        if (worst > phase_tol) {
            rep.violations.emplace_back(
                worst_t, "constant P = 1/2 requires Phidot = 0; |Phidot| = " +
                             std::to_string(worst));
        }
    }
    for (double ts : rep.crossings.times) {
        const double pd = std::abs(phase.slope(ts));
        const bool ok = pd <= phase_tol;
        rep.phase_constraint_ok.push_back(ok);
        if (!ok) {
            rep.violations.emplace_back(ts, "population crossing P = 1/2 at t* = " +
                                                std::to_string(ts) + " with |Phidot| = " +
                                                std::to_string(pd) + " > phase_tol");
        }
    }

    // Closed-system admissible band, P - P^2 >= k.
    const double quarter = 0.25 - k.k;
    const double half_width = quarter > 0.0 ? std::sqrt(quarter) : 0.0;
    const int n = 10001;
    for (int i = 0; i < n; ++i) {
        const double t = pop.t_f() * static_cast<double>(i) / (n - 1);
        const double P = pop.value(t);
        if (P < 0.5 - half_width - 1e-12 || P > 0.5 + half_width + 1e-12) {
            rep.unitary_band_ok = false;
            rep.violations.emplace_back(t, "P(t) = " + std::to_string(P) +
                                               " leaves the closed-system band [" +
                                               std::to_string(0.5 - half_width) + ", " +
                                               std::to_string(0.5 + half_width) + "]");
            break;
        }
    }
    return rep;
}

}  // namespace tlc
