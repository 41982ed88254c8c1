#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "tlc/reachability.hpp"

using namespace tlc;

namespace {

// Closed-system accessibility oracle for C0 = 0: with k = Pi - Pi^2 the band
// condition P(1-P) >= k holds along a monotone ramp iff Pf lies between Pi
// and 1 - Pi (inclusive).
bool band_oracle(double Pi, double Pf) {
    const double lo = std::min(Pi, 1.0 - Pi), hi = std::max(Pi, 1.0 - Pi);
    return Pf >= lo - 1e-12 && Pf <= hi + 1e-12;
}

bool unitary_ok(double Pi, double Pf, double C0) {
    const double k = Pi - Pi * Pi - C0 * C0;
    if (k < 0.0) return false;
    return std::min(Pi * (1.0 - Pi), Pf * (1.0 - Pf)) >= k - 1e-12;
}

}  // namespace

TEST_CASE("classify_transition: dephasing reference points") {
    const double C0 = 0.02, t_f = 1500.0;
    CHECK(classify_transition(0.9, 0.4, derive_rates(1e-4, 0, 0), C0, t_f, 400) ==
          TransitionClass::noise_accessible);
    CHECK(classify_transition(0.9, 0.4, derive_rates(1e-3, 0, 0), C0, t_f, 400) ==
          TransitionClass::noise_accessible);
    CHECK(classify_transition(0.9, 0.4, derive_rates(5e-3, 0, 0), C0, t_f, 400) ==
          TransitionClass::unitary_only);
}

TEST_CASE("classify_transition: band exit and invalid initial state") {
    // k = 0.5 - 0.25 - 0.04 = 0.21, band 0.5 +- 0.2 excludes Pf = 1
    CHECK(classify_transition(0.5, 1.0, derive_rates(0, 0, 0), 0.2, 1500.0, 400) ==
          TransitionClass::unitary_inaccessible);
    // C0^2 > Pi - Pi^2
    CHECK(classify_transition(1.0, 0.5, derive_rates(0, 0, 0), 0.02, 1500.0, 400) ==
          TransitionClass::invalid_initial);
}

TEST_CASE("classify_transition rejects too-coarse time grids") {
    CHECK_THROWS_AS(classify_transition(0.9, 0.4, derive_rates(0, 0, 0), 0.02, 1500.0, 50),
                    DomainError);
}

TEST_CASE("zero-rate map equals the closed-form band oracle") {
    const auto grid = accessibility_map(derive_rates(0, 0, 0), 0.0, 1500.0, 41, 400, 2);
    for (int i = 0; i < 41; ++i) {
        for (int j = 0; j < 41; ++j) {
            const double Pi = grid.Pi_axis[i], Pf = grid.Pf_axis[j];
            const bool accessible = grid.at(i, j) == TransitionClass::noise_accessible;
            CHECK(accessible == band_oracle(Pi, Pf));
        }
    }
    // point symmetry (Pi, Pf) <-> (1-Pi, 1-Pf)
    for (int i = 0; i < 41; ++i) {
        for (int j = 0; j < 41; ++j) {
            CHECK(grid.at(i, j) == grid.at(40 - i, 40 - j));
        }
    }
}

TEST_CASE("pure dephasing: accessible region shrinks with gamma and stays in the band") {
    const double C0 = 0.2, t_f = 1500.0;
    size_t prev = SIZE_MAX;
    for (double g : {1e-4, 1e-3, 5e-3}) {
        const auto grid = accessibility_map(derive_rates(g, 0, 0), C0, t_f, 41, 400, 2);
        for (int i = 0; i < 41; ++i) {
            for (int j = 0; j < 41; ++j) {
                if (grid.at(i, j) == TransitionClass::noise_accessible) {
                    CHECK(unitary_ok(grid.Pi_axis[i], grid.Pf_axis[j], C0));
                }
            }
        }
        const size_t dark = grid.count(TransitionClass::noise_accessible);
        CHECK(dark <= prev);
        prev = dark;
    }
}

TEST_CASE("thermal noise opens cells outside the closed-system region") {
    const auto grid =
        accessibility_map(derive_rates(1e-3, 1e-3, 0.3), 0.02, 1500.0, 61, 400, 2);
    size_t dark_outside = 0;
    for (int i = 0; i < 61; ++i) {
        for (int j = 0; j < 61; ++j) {
            if (grid.at(i, j) == TransitionClass::noise_accessible &&
                !unitary_ok(grid.Pi_axis[i], grid.Pf_axis[j], 0.02)) {
                ++dark_outside;
            }
        }
    }
    CHECK(dark_outside > 0);
}

TEST_CASE("self-transitions at the steady coherence are accessible") {
    const auto r = derive_rates(1e-3, 1e-3, 0.3);
    for (double P : {0.55, 0.6, 0.7, 0.8}) {
        const auto s = steady_state_coherence(P, r);
        REQUIRE(s.feasible);
        CHECK(classify_transition(P, P, r, s.C0, 1500.0, 400) ==
              TransitionClass::noise_accessible);
    }
}

TEST_CASE("map determinism across worker counts") {
    const auto r = derive_rates(1e-3, 0, 0);
    const auto a = accessibility_map(r, 0.02, 1500.0, 31, 200, 1);
    const auto b = accessibility_map(r, 0.02, 1500.0, 31, 200, 4);
    CHECK(a.cells == b.cells);
}

TEST_CASE("asymptotic curve") {
    const auto r = derive_rates(1e-3, 1e-3, 0.3);
    auto curve = asymptotic_curve(r, 1601);
    // zeros at P = 1/2 and P = 1.3/1.6 = 0.8125
    for (const auto& pt : curve) {
        if (pt.P > 0.501 && pt.P < 0.812) {
            CHECK(pt.Cinf > 0.0);
            CHECK_FALSE(pt.clamped);
        }
        if (pt.P < 0.499 || pt.P > 0.813) {
            CHECK(pt.Cinf == 0.0);
            CHECK(pt.clamped);
        }
    }
    CHECK_THROWS_AS(asymptotic_curve(derive_rates(0, 0, 0), 100), DomainError);
    // pure dephasing: zero up to the rounding of P - P^2 - lambda(P)
    auto flat = asymptotic_curve(derive_rates(1e-3, 0, 0), 11);
    for (const auto& pt : flat) CHECK(pt.Cinf < 1e-8);
}
