#pragma once

#include <cmath>

#include "tlc/errors.hpp"

namespace tlc {

// Physical parameters of the driven two-level system, atomic units (hbar = 1).
struct SystemParams {
    double omega   = 0.02;  // resonance frequency, > 0
    double mu      = 6.0;   // dipole projection along the field axis, != 0
    double omega_p = 0.02;  // carrier frequency of the pulse, > 0

    void validate() const {
        if (!(omega > 0)) throw DomainError("SystemParams: omega must be > 0");
        if (mu == 0.0) throw DomainError("SystemParams: mu must be nonzero");
        if (!(omega_p > 0)) throw DomainError("SystemParams: omega_p must be > 0");
    }
};

inline SystemParams make_system_params(double omega, double mu) {
    SystemParams p{omega, mu, omega};
    p.validate();
    return p;
}

// Raw environment rates plus every derived decay constant used by the
// coherence equation. All derived fields are functions of (gamma, Gamma, nbar).
struct NoiseRates {
    double gamma = 0.0;  // pure dephasing rate
    double Gamma = 0.0;  // thermal-noise rate
    double nbar  = 0.0;  // mean thermal phonon number

    double Gamma_tilde  = 0.0;  // gamma + Gamma*(2 nbar + 1), total coherence decay
    double Gamma1       = 0.0;  // 2 Gamma (nbar + 1)
    double Gamma2       = 0.0;  // 2 Gamma (2 nbar + 1)
    double gamma_tilde  = 0.0;  // Gamma1 / (2 Gamma_tilde), 0 when Gamma_tilde = 0
    double Gamma_tilde1 = 0.0;  // 2 Gamma1 + Gamma2 - 2 Gamma_tilde
    double Gamma_tilde2 = 0.0;  // 2 (Gamma_tilde - Gamma2)

    bool zero() const { return gamma == 0.0 && Gamma == 0.0; }
};

NoiseRates derive_rates(double gamma, double Gamma, double nbar);

// Two-level density matrix: rho00 on the diagonal, rho01 = rho10^*.
struct QubitState {
    double rho00    = 1.0;
    double rho01_re = 0.0;
    double rho01_im = 0.0;

    double coherence_sq() const { return rho01_re * rho01_re + rho01_im * rho01_im; }
    double coherence() const { return std::sqrt(coherence_sq()); }
    double purity() const {
        const double r11 = 1.0 - rho00;
        return rho00 * rho00 + r11 * r11 + 2.0 * coherence_sq();
    }
    // Positivity of the 2x2 density matrix within `tol`.
    bool valid(double tol = 0.0) const {
        if (rho00 < -tol || rho00 > 1.0 + tol) return false;
        return coherence_sq() <= rho00 * (1.0 - rho00) + tol;
    }
};

QubitState make_qubit_state(double P0, double C0, double Phi0);

// k = P(0) - P(0)^2 - C(0)^2. Purity of the initial state is 1 - 2k, so a
// valid state always has k in [0, 1/4]; k = 0 marks a pure state.
struct MixednessConstant {
    double k = 0.0;
};

MixednessConstant mixedness_constant(double P0, double C0);

}  // namespace tlc
