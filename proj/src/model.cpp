#include "tlc/model.hpp"

#include <cmath>
#include <string>

namespace tlc {

NoiseRates derive_rates(double gamma, double Gamma, double nbar) {
    if (!(gamma >= 0.0)) throw DomainError("derive_rates: gamma must be >= 0");
    if (!(Gamma >= 0.0)) throw DomainError("derive_rates: Gamma must be >= 0");
    if (!(nbar >= 0.0)) throw DomainError("derive_rates: nbar must be >= 0");

    NoiseRates r;
    r.gamma = gamma;
    r.Gamma = Gamma;
    r.nbar  = nbar;

    r.Gamma_tilde = gamma + Gamma * (2.0 * nbar + 1.0);
    r.Gamma1      = 2.0 * Gamma * (nbar + 1.0);
    r.Gamma2      = 2.0 * Gamma * (2.0 * nbar + 1.0);
    // The only uses of gamma_tilde are multiplied by factors that vanish in
    // the Gamma_tilde -> 0 limit, so 0 is the consistent value there.
    r.gamma_tilde  = r.Gamma_tilde > 0.0 ? r.Gamma1 / (2.0 * r.Gamma_tilde) : 0.0;
    r.Gamma_tilde1 = 2.0 * r.Gamma1 + r.Gamma2 - 2.0 * r.Gamma_tilde;
    r.Gamma_tilde2 = 2.0 * (r.Gamma_tilde - r.Gamma2);
    return r;
}

QubitState make_qubit_state(double P0, double C0, double Phi0) {
    if (P0 < 0.0 || P0 > 1.0) throw DomainError("make_qubit_state: P0 must lie in [0,1]");
    if (C0 < 0.0) throw DomainError("make_qubit_state: C0 must be >= 0");
    QubitState s{P0, C0 * std::cos(Phi0), C0 * std::sin(Phi0)};
    if (C0 * C0 > P0 * (1.0 - P0)) {
        throw InfeasibleError("make_qubit_state: C0^2 > P0(1-P0) violates positivity");
    }
    return s;
}

MixednessConstant mixedness_constant(double P0, double C0) {
    if (P0 < 0.0 || P0 > 1.0) throw DomainError("mixedness_constant: P0 must lie in [0,1]");
    if (C0 < 0.0) throw DomainError("mixedness_constant: C0 must be >= 0");
    const double k = P0 - P0 * P0 - C0 * C0;
    if (k < 0.0) {
        throw InfeasibleError("mixedness_constant: C0^2 = " + std::to_string(C0 * C0) +
                              " exceeds P0 - P0^2 = " + std::to_string(P0 - P0 * P0) +
                              " (Tr rho^2 would exceed 1)");
    }
    return MixednessConstant{k};
}

}  // namespace tlc
