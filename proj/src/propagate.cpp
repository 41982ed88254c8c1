#include "tlc/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tlc {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct State3 {
    double p, x, y;
};

State3 operator+(State3 a, State3 b) { return {a.p + b.p, a.x + b.x, a.y + b.y}; }
State3 operator*(double s, State3 a) { return {s * a.p, s * a.x, s * a.y}; }

template <typename Rhs>
Trajectory integrate_rk4(Frame frame, double omega, const Rhs& rhs, const QubitState& rho0,
                         double t_f, double dt, double positivity_tol) {
    if (!(dt > 0.0)) throw DomainError("propagate: dt must be > 0");
    if (dt > t_f) throw DomainError("propagate: dt must not exceed t_f");
    const long n_steps = std::max(1L, std::lround(std::ceil(t_f / dt - 1e-9)));
    const double h = t_f / static_cast<double>(n_steps);

    Trajectory traj;
    traj.frame = frame;
    traj.omega = omega;
    traj.t.reserve(n_steps + 1);
    traj.rho00.reserve(n_steps + 1);
    traj.re01.reserve(n_steps + 1);
    traj.im01.reserve(n_steps + 1);

    State3 s{rho0.rho00, rho0.rho01_re, rho0.rho01_im};
    auto store = [&](double t, const State3& v) {
        traj.t.push_back(t);
        traj.rho00.push_back(v.p);
        traj.re01.push_back(v.x);
        traj.im01.push_back(v.y);
        const double csq = v.x * v.x + v.y * v.y;
        if (v.p < -positivity_tol || v.p > 1.0 + positivity_tol ||
            csq > v.p * (1.0 - v.p) + positivity_tol || !std::isfinite(v.p + csq)) {
            throw IntegrationError("propagate: density-matrix positivity violated at t = " +
                                       std::to_string(t),
                                   t);
        }
    };

    store(0.0, s);
    for (long i = 0; i < n_steps; ++i) {
        const double t = h * static_cast<double>(i);
        const double t_mid = t + 0.5 * h;
        const double t_end = (i + 1 == n_steps) ? t_f : t + h;
        const State3 k1 = rhs(t, s);
        const State3 k2 = rhs(t_mid, s + 0.5 * h * k1);
        const State3 k3 = rhs(t_mid, s + 0.5 * h * k2);
        const State3 k4 = rhs(t_end, s + h * k3);
        s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        store(t_end, s);
    }

    extract_phase(traj, frame == Frame::lab ? omega : 0.0);
    return traj;
}

}  // namespace

double default_lab_dt(const SystemParams& params, double t_f) {
    return std::min(2.0 * kPi / params.omega / 100.0, t_f / 1e5);
}

Trajectory propagate_lab_field(const SystemParams& params, const NoiseRates& rates,
                               const std::function<double(double)>& e_field,
                               const QubitState& rho0, double t_f, double dt,
                               double positivity_tol) {
    params.validate();
    if (!(t_f > 0.0)) throw DomainError("propagate_lab: t_f must be > 0");
    if (dt > 2.0 * kPi / params.omega / 40.0) {
        throw DomainError("propagate_lab: dt must resolve the carrier (dt <= T_carrier/40)");
    }
    const double mu = params.mu, om = params.omega;
    const double G1 = rates.Gamma1, G2 = rates.Gamma2, Gt = rates.Gamma_tilde;
    auto rhs = [&](double t, const State3& s) -> State3 {
        const double E = e_field(t);
        return {2.0 * mu * E * s.y + G1 - G2 * s.p,
                -om * s.y - Gt * s.x,
                om * s.x - mu * E * (2.0 * s.p - 1.0) - Gt * s.y};
    };
    return integrate_rk4(Frame::lab, om, rhs, rho0, t_f, dt, positivity_tol);
}

Trajectory propagate_lab(const SystemParams& params, const NoiseRates& rates,
                         const ControlField& field, const QubitState& rho0, double t_f,
                         double dt, double positivity_tol) {
    if (dt <= 0.0) dt = default_lab_dt(params, t_f);
    return propagate_lab_field(
        params, rates, [&field](double t) { return field.e_field(t); }, rho0, t_f, dt,
        positivity_tol);
}

Trajectory propagate_rwa_envelope(const SystemParams& params, const NoiseRates& rates,
                                  const std::function<std::complex<double>(double)>& envelope,
                                  const QubitState& rho0, double t_f, double dt,
                                  double positivity_tol) {
    params.validate();
    if (params.omega_p != params.omega) {
        throw DomainError("propagate_rwa: requires resonance (omega_p = omega)");
    }
    if (!(t_f > 0.0)) throw DomainError("propagate_rwa: t_f must be > 0");
    if (!(dt <= t_f / 1000.0)) {
        throw DomainError("propagate_rwa: dt must be <= t_f / 1000");
    }
    const double mu = params.mu;
    const double G1 = rates.Gamma1, G2 = rates.Gamma2, Gt = rates.Gamma_tilde;
    auto rhs = [&](double t, const State3& s) -> State3 {
        const std::complex<double> eps = envelope(t);
        const double er = eps.real(), ei = eps.imag();
        // Im(rho01 * eps) couples the coherence into the populations; the
        // conjugate envelope drives the coherence.
        return {2.0 * mu * (s.x * ei + s.y * er) + G1 - G2 * s.p,
                -mu * (2.0 * s.p - 1.0) * ei - Gt * s.x,
                -mu * (2.0 * s.p - 1.0) * er - Gt * s.y};
    };
    return integrate_rk4(Frame::rotating, params.omega, rhs, rho0, t_f, dt, positivity_tol);
}

Trajectory propagate_rwa(const SystemParams& params, const NoiseRates& rates,
                         const ControlField& field, const QubitState& rho0, double t_f,
                         double dt, double positivity_tol) {
    if (dt <= 0.0) dt = t_f / 2e4;
    return propagate_rwa_envelope(
        params, rates, [&field](double t) { return field.rwa_envelope(t); }, rho0, t_f, dt,
        positivity_tol);
}

void extract_phase(Trajectory& traj, double omega) {
    const size_t n = traj.size();
    if (n == 0) throw DomainError("extract_phase: empty trajectory");
    traj.P_num.assign(n, 0.0);
    traj.C_num.assign(n, 0.0);
    traj.Phi_num.assign(n, std::numeric_limits<double>::quiet_NaN());
    traj.phase_defined.assign(n, 0);

    double offset = 0.0;
    bool have_prev = false;
    double prev_raw = 0.0;
    for (size_t i = 0; i < n; ++i) {
        traj.P_num[i] = traj.rho00[i];
        const double x = traj.re01[i], y = traj.im01[i];
        const double c = std::hypot(x, y);
        traj.C_num[i] = c;
        if (c < kPhaseDefinedFloor) continue;
        const double wt = omega * traj.t[i];
        // rho01 e^{-i omega t}
        const double xr = x * std::cos(wt) + y * std::sin(wt);
        const double yr = y * std::cos(wt) - x * std::sin(wt);
        const double raw = std::atan2(yr, xr);
        if (have_prev) {
            double d = raw - prev_raw;
            while (d > kPi) {
                offset -= 2.0 * kPi;
                d -= 2.0 * kPi;
            }
            while (d < -kPi) {
                offset += 2.0 * kPi;
                d += 2.0 * kPi;
            }
        }
        traj.Phi_num[i] = raw + offset;
        traj.phase_defined[i] = 1;
        prev_raw = raw;
        have_prev = true;
    }
}

ConvergenceResult convergence_check(const std::function<QubitState(double dt)>& run, double dt0,
                                    int levels) {
    if (levels < 3) throw DomainError("convergence_check: need at least 3 levels");
    ConvergenceResult out;
    std::vector<QubitState> finals;
    finals.reserve(levels + 1);
    double dt = dt0;
    for (int j = 0; j <= levels; ++j) {
        finals.push_back(run(dt));
        dt *= 0.5;
    }
    for (int j = 0; j < levels; ++j) {
        const auto& a = finals[j];
        const auto& b = finals[j + 1];
        const double e = std::sqrt(std::pow(a.rho00 - b.rho00, 2) +
                                   std::pow(a.rho01_re - b.rho01_re, 2) +
                                   std::pow(a.rho01_im - b.rho01_im, 2));
        out.errors.push_back(e);
    }
    for (size_t j = 0; j + 1 < out.errors.size(); ++j) {
        if (out.errors[j + 1] <= 0.0 || out.errors[j] <= 0.0) break;
        out.orders.push_back(std::log2(out.errors[j] / out.errors[j + 1]));
    }
    if (!out.orders.empty()) {
        out.order = out.orders.back();
        out.reliable = true;
        for (double o : out.orders) {
            if (std::abs(o - out.order) > 0.5) out.reliable = false;
        }
        for (size_t j = 0; j + 1 < out.errors.size(); ++j) {
            if (out.errors[j + 1] >= out.errors[j]) out.reliable = false;
        }
    }
    return out;
}

}  // namespace tlc
