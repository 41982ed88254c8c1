#include <random>

#include "doctest.h"
#include "tlc/model.hpp"

using namespace tlc;

TEST_CASE("derive_rates: zero thermal noise zeroes every derived rate") {
    const auto r = derive_rates(0.0, 0.0, 0.3);
    CHECK(r.Gamma_tilde == 0.0);
    CHECK(r.Gamma1 == 0.0);
    CHECK(r.Gamma2 == 0.0);
    CHECK(r.gamma_tilde == 0.0);
    CHECK(r.Gamma_tilde1 == 0.0);
    CHECK(r.Gamma_tilde2 == 0.0);
}

TEST_CASE("derive_rates: reference values") {
    const auto r = derive_rates(1e-3, 1e-4, 0.3);
    CHECK(r.Gamma_tilde == doctest::Approx(1.16e-3).epsilon(1e-12));
    CHECK(r.Gamma1 == doctest::Approx(2.6e-4).epsilon(1e-12));
    CHECK(r.Gamma2 == doctest::Approx(3.2e-4).epsilon(1e-12));
    CHECK(r.gamma_tilde == doctest::Approx(0.11206896551724138).epsilon(1e-12));
    CHECK(r.Gamma_tilde1 == doctest::Approx(-1.48e-3).epsilon(1e-12));
    CHECK(r.Gamma_tilde2 == doctest::Approx(1.68e-3).epsilon(1e-12));
    // identity Gamma_tilde1 + Gamma_tilde2 = 2 Gamma1 - Gamma2
    CHECK(r.Gamma_tilde1 + r.Gamma_tilde2 ==
          doctest::Approx(2.0 * r.Gamma1 - r.Gamma2).epsilon(1e-12));
    CHECK(2.0 * r.Gamma1 - r.Gamma2 == doctest::Approx(2.0e-4).epsilon(1e-12));
}

TEST_CASE("derive_rates: pure dephasing") {
    const auto r = derive_rates(1e-3, 0.0, 0.0);
    CHECK(r.Gamma_tilde == doctest::Approx(1e-3));
    CHECK(r.Gamma1 == 0.0);
    CHECK(r.Gamma2 == 0.0);
    CHECK(r.gamma_tilde == 0.0);
    CHECK(r.Gamma_tilde1 == doctest::Approx(-2e-3));
    CHECK(r.Gamma_tilde2 == doctest::Approx(2e-3));
}

TEST_CASE("derive_rates: rejects negative inputs naming the field") {
    CHECK_THROWS_WITH_AS(derive_rates(-1e-3, 0.0, 0.0), doctest::Contains("gamma"), DomainError);
    CHECK_THROWS_WITH_AS(derive_rates(0.0, -1e-3, 0.0), doctest::Contains("Gamma"), DomainError);
    CHECK_THROWS_WITH_AS(derive_rates(0.0, 0.0, -0.1), doctest::Contains("nbar"), DomainError);
}

TEST_CASE("derive_rates: ordering and scale covariance") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> rate(0.0, 1e-2), phot(0.0, 2.0), scale(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double g = rate(rng), G = rate(rng), n = phot(rng), s = scale(rng);
        const auto r = derive_rates(g, G, n);
        CHECK(r.Gamma_tilde >= r.gamma);
        CHECK(r.Gamma2 >= r.Gamma1);
        CHECK(r.Gamma1 >= 0.0);
        // scaling (gamma, Gamma) by s scales every derived rate by s; the
        // dimensionless gamma_tilde is unchanged
        const auto rs = derive_rates(s * g, s * G, n);
        CHECK(rs.Gamma_tilde == doctest::Approx(s * r.Gamma_tilde).epsilon(1e-13));
        CHECK(rs.Gamma1 == doctest::Approx(s * r.Gamma1).epsilon(1e-13));
        CHECK(rs.Gamma2 == doctest::Approx(s * r.Gamma2).epsilon(1e-13));
        CHECK(rs.Gamma_tilde1 == doctest::Approx(s * r.Gamma_tilde1).epsilon(1e-12));
        CHECK(rs.Gamma_tilde2 == doctest::Approx(s * r.Gamma_tilde2).epsilon(1e-12));
        if (r.Gamma_tilde > 0.0) {
            CHECK(rs.gamma_tilde == doctest::Approx(r.gamma_tilde).epsilon(1e-12));
        }
    }
}

TEST_CASE("mixedness_constant: examples") {
    CHECK(mixedness_constant(1.0, 0.0).k == 0.0);
    const auto m = mixedness_constant(0.8, 0.2);
    CHECK(m.k == doctest::Approx(0.12).epsilon(1e-14));
    CHECK(1.0 - 2.0 * m.k == doctest::Approx(0.76).epsilon(1e-14));
    CHECK_THROWS_AS(mixedness_constant(0.5, 0.6), InfeasibleError);
}

TEST_CASE("mixedness_constant: any valid state gives k in [0, 1/4]") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double P = u(rng);
        const double cmax = std::sqrt(P * (1.0 - P));
        const double C = u(rng) * cmax;
        const auto m = mixedness_constant(P, C);
        CHECK(m.k >= 0.0);
        CHECK(m.k <= 0.25 + 1e-15);
        QubitState s{P, C, 0.0};
        CHECK(s.valid(1e-12));
        CHECK(s.purity() == doctest::Approx(1.0 - 2.0 * m.k).epsilon(1e-12));
    }
}

TEST_CASE("QubitState validity and purity bounds") {
    QubitState pure{1.0, 0.0, 0.0};
    CHECK(pure.valid());
    CHECK(pure.purity() == doctest::Approx(1.0));
    QubitState mixed{0.5, 0.0, 0.0};
    CHECK(mixed.purity() == doctest::Approx(0.5));
    QubitState bad{0.9, 0.4, 0.4};  // |rho01|^2 = 0.32 > 0.09
    CHECK_FALSE(bad.valid(1e-9));
    CHECK_THROWS_AS(make_qubit_state(0.9, 0.6, 0.0), InfeasibleError);
}
