#include <cmath>

#include "doctest.h"
#include "tlc/commands.hpp"
#include "tlc/figures.hpp"
#include "tlc/propagate.hpp"

using namespace tlc;

namespace {

constexpr double kPi = 3.14159265358979323846;

const auto kZeroField = [](double) { return 0.0; };

}  // namespace

TEST_CASE("field-free thermal relaxation matches the analytic exponential") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r = derive_rates(0.0, 1e-3, 0.0);
    const QubitState rho0{0.0, 0.0, 0.0};
    const double t_f = 3500.0;
    auto traj = propagate_lab_field(params, r, kZeroField, rho0, t_f, default_lab_dt(params, t_f));
    double worst = 0.0;
    for (size_t i = 0; i < traj.size(); ++i) {
        const double exact = 1.0 - std::exp(-2.0 * r.Gamma * traj.t[i]);
        worst = std::max(worst, std::abs(traj.P_num[i] - exact));
    }
    CHECK(worst < 1e-8);

    // same relaxation in the rotating frame with a null envelope
    auto rwa = propagate_rwa_envelope(
        params, r, [](double) { return std::complex<double>(0.0, 0.0); }, rho0, t_f, t_f / 2e4);
    for (size_t i = 0; i < rwa.size(); i += 100) {
        const double exact = 1.0 - std::exp(-2.0 * r.Gamma * rwa.t[i]);
        CHECK(std::abs(rwa.P_num[i] - exact) < 1e-10);
    }
}

TEST_CASE("field-free coherence decay with a frame-constant phase") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r = derive_rates(1e-3, 1e-4, 0.3);
    const double C0 = 0.3, Phi0 = 0.7;
    const QubitState rho0 = make_qubit_state(0.5, C0, Phi0);
    const double t_f = 2000.0;
    auto traj = propagate_lab_field(params, r, kZeroField, rho0, t_f, default_lab_dt(params, t_f));
    for (size_t i = 0; i < traj.size(); i += 500) {
        const double exact = C0 * std::exp(-r.Gamma_tilde * traj.t[i]);
        CHECK(std::abs(traj.C_num[i] - exact) < 1e-8);
        if (traj.phase_defined[i]) {
            CHECK(std::abs(traj.Phi_num[i] - Phi0) < 1e-9);
        }
    }
}

TEST_CASE("free closed-system evolution conserves purity and the rotating state") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r0 = derive_rates(0, 0, 0);
    const QubitState rho0 = make_qubit_state(0.7, 0.4, 0.3);
    const double t_f = 3500.0;
    auto traj = propagate_lab_field(params, r0, kZeroField, rho0, t_f, default_lab_dt(params, t_f));
    const double p0 = rho0.purity();
    for (size_t i = 0; i < traj.size(); i += 250) {
        CHECK(std::abs(traj.state(i).purity() - p0) < 1e-12);
        CHECK(std::abs(traj.P_num[i] - 0.7) < 1e-13);
        CHECK(std::abs(traj.Phi_num[i] - 0.3) < 1e-9);
        CHECK(std::abs(traj.C_num[i] - 0.4) < 1e-11);
    }
}

TEST_CASE("observed RK4 order") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r = derive_rates(0.0, 1e-2, 0.0);
    const QubitState rho0{0.0, 0.0, 0.0};
    const double t_f = 1000.0;

    // against the analytic solution: error scales as dt^4 within 20%
    auto error_at = [&](double dt) {
        auto traj = propagate_lab_field(params, r, kZeroField, rho0, t_f, dt);
        double worst = 0.0;
        for (size_t i = 0; i < traj.size(); ++i) {
            const double exact = 1.0 - std::exp(-2.0 * r.Gamma * traj.t[i]);
            worst = std::max(worst, std::abs(traj.P_num[i] - exact));
        }
        return worst;
    };
    const double e1 = error_at(6.25), e2 = error_at(3.125), e3 = error_at(1.5625);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.2));
    CHECK(e2 / e3 == doctest::Approx(16.0).epsilon(0.2));

    // Richardson order estimate on a driven scenario
    const QubitState rho1 = make_qubit_state(0.6, 0.3, 0.2);
    auto run = [&](double dt) {
        auto field = [](double t) { return 1e-3 * std::sin(0.02 * t); };
        return propagate_lab_field(params, r, field, rho1, t_f, dt).final_state();
    };
    auto res = convergence_check(run, 6.25, 4);
    CHECK(res.reliable);
    CHECK(res.order > 3.7);
    CHECK(res.order < 4.3);
}

TEST_CASE("order estimate flagged unreliable outside the asymptotic regime") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r0 = derive_rates(0, 0, 0);
    const QubitState rho0 = make_qubit_state(0.6, 0.3, 0.0);
    auto run = [&](double dt) {
        return propagate_lab_field(params, r0, kZeroField, rho0, 10.0, dt).final_state();
    };
    // steps this small bury the truncation error under roundoff; successive
    // halvings stop improving and the estimate must not be trusted
    auto res = convergence_check(run, 0.02, 3);
    CHECK_FALSE(res.reliable);
}

TEST_CASE("positivity violation aborts with the failure time") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r0 = derive_rates(0, 0, 0);
    const QubitState rho0 = make_qubit_state(1.0, 0.0, 0.0);
    // an absurdly strong resonant drive at a step far beyond stability
    auto field = [](double t) { return 50.0 * std::sin(0.02 * t); };
    CHECK_THROWS_AS(propagate_lab_field(params, r0, field, rho0, 1000.0, 7.0), IntegrationError);
}

TEST_CASE("phase extraction: unwrap and undefined samples") {
    Trajectory traj;
    traj.frame = Frame::rotating;
    const double w = 3e-3;
    for (int i = 0; i <= 4000; ++i) {
        const double t = i * 1.0;
        traj.t.push_back(t);
        traj.rho00.push_back(0.5);
        traj.re01.push_back(0.1 * std::cos(w * t));
        traj.im01.push_back(0.1 * std::sin(w * t));
    }
    extract_phase(traj, 0.0);
    CHECK(traj.Phi_num.back() == doctest::Approx(w * 4000.0).epsilon(1e-10));
    for (size_t i = 1; i < traj.size(); ++i) {
        CHECK(std::abs(traj.Phi_num[i] - traj.Phi_num[i - 1]) < kPi);
    }

    Trajectory dead;
    dead.frame = Frame::rotating;
    for (int i = 0; i < 10; ++i) {
        dead.t.push_back(i);
        dead.rho00.push_back(1.0);
        dead.re01.push_back(0.0);
        dead.im01.push_back(0.0);
    }
    extract_phase(dead, 0.0);
    for (size_t i = 0; i < dead.size(); ++i) {
        CHECK_FALSE(dead.phase_defined[i]);
        CHECK(std::isnan(dead.Phi_num[i]));
    }
}

TEST_CASE("rotating-frame propagation of a synthesized pulse is self-consistent") {
    auto bundle = figure_bundle("5");
    auto p = build_pipeline(parse_config(bundle[0].config));
    const auto cfg = parse_config(bundle[0].config);
    const QubitState rho0 = make_qubit_state(p.pop.value(0.0), p.coh.value(0.0), p.phase.value(0.0));
    auto traj = propagate_rwa(cfg.system, cfg.noise, p.field, rho0, p.field.t_f());
    double worst_p = 0.0, worst_phi = 0.0;
    for (size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.t[i];
        worst_p = std::max(worst_p, std::abs(traj.P_num[i] - p.pop.value(t)));
        if (traj.phase_defined[i]) {
            worst_phi = std::max(
                worst_phi, std::abs(std::remainder(traj.Phi_num[i] - p.phase.value(t), 2 * kPi)));
        }
    }
    CHECK(worst_p < 1e-6);
    CHECK(worst_phi < 1e-6);
}

TEST_CASE("rotating-frame coherence matches the prescribed modulus (constant-P pulse)") {
    const auto cfg = parse_config(figure_bundle("2")[0].config);
    Pipeline p = build_pipeline(cfg);
    const QubitState rho0 =
        make_qubit_state(p.pop.value(0.0), p.coh.value(0.0), p.phase.value(0.0));
    auto traj = propagate_rwa(cfg.system, cfg.noise, p.field, rho0, p.field.t_f());
    double worst = 0.0;
    for (size_t i = 0; i < traj.size(); ++i) {
        worst = std::max(worst, std::abs(traj.C_num[i] - p.coh.value(traj.t[i])));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("tracked phase completes the full rotation (lab frame)") {
    const auto cfg = parse_config(figure_bundle("2")[0].config);
    Pipeline p = build_pipeline(cfg);
    const QubitState rho0 =
        make_qubit_state(p.pop.value(0.0), p.coh.value(0.0), p.phase.value(0.0));
    auto traj = propagate_lab(cfg.system, cfg.noise, p.field, rho0, p.field.t_f());
    REQUIRE(traj.phase_defined.back());
    CHECK(std::abs(traj.Phi_num.back() - 2.0 * kPi) < 0.05);
}

TEST_CASE("holding the equator: constant P = 1/2 against thermal drift") {
    // 2P - 1 = 0 on the whole horizon: the cosine quadrature carries no
    // information and the sine quadrature alone balances the thermal pull
    const auto params = make_system_params(0.02, 6.0);
    const auto r = derive_rates(0.0, 1e-3, 0.0);
    const double t_f = 500.0, C0 = 0.3;
    auto pop = PopulationProfile::constant(0.5, t_f);
    auto phase = PhaseProfile::linear(0.0, t_f);
    auto coh = CoherenceSolution::solve(pop, r, C0);
    auto field = synthesize(pop, phase, coh, params, r);
    for (double t : {0.0, 250.0, 500.0}) {
        CHECK(std::isfinite(field.e_field(t)));
        CHECK(field.point(t).Y == 0.0);
    }
    const QubitState rho0 = make_qubit_state(0.5, C0, 0.0);
    auto traj = propagate_rwa(params, r, field, rho0, t_f);
    for (size_t i = 0; i < traj.size(); i += 1000) {
        CHECK(std::abs(traj.P_num[i] - 0.5) < 1e-9);
        CHECK(std::abs(traj.C_num[i] - coh.value(traj.t[i])) < 1e-9);
    }
}

TEST_CASE("lab and rotating frames converge as the pulse slows down") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r0 = derive_rates(0, 0, 0);
    double prev = 1e300;
    for (double t_f : {1750.0, 3500.0, 7000.0}) {
        auto pop = PopulationProfile::sine_squared(1.0, 0.0, t_f);
        auto phase = PhaseProfile::quadratic(0.0, 0.0, t_f / 2.0, t_f, 1.0);
        auto coh = CoherenceSolution::solve(pop, r0, 0.0);
        auto field = synthesize(pop, phase, coh, params, r0);
        const QubitState rho0 = make_qubit_state(1.0, 0.0, 0.0);
        auto lab = propagate_lab(params, r0, field, rho0, t_f);
        double worst = 0.0;
        for (size_t i = 0; i < lab.size(); ++i) {
            worst = std::max(worst, std::abs(lab.P_num[i] - pop.value(lab.t[i])));
        }
        CHECK(worst < prev);
        prev = worst;
    }
}

TEST_CASE("propagator input validation") {
    const auto params = make_system_params(0.02, 6.0);
    const auto r0 = derive_rates(0, 0, 0);
    const QubitState rho0 = make_qubit_state(1.0, 0.0, 0.0);
    // carrier-resolution precondition: dt <= T_carrier / 40 = 7.85
    CHECK_THROWS_AS(propagate_lab_field(params, r0, kZeroField, rho0, 100.0, 10.0), DomainError);
    CHECK_THROWS_AS(propagate_lab_field(params, r0, kZeroField, rho0, 100.0, -1.0), DomainError);
    CHECK_THROWS_AS(propagate_rwa_envelope(
                        params, r0, [](double) { return std::complex<double>(0, 0); }, rho0,
                        100.0, 1.0),
                    DomainError);
}
