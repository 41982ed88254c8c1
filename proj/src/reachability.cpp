#include "tlc/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "tlc/profiles.hpp"

namespace tlc {

const char* to_string(TransitionClass c) {
    switch (c) {
        case TransitionClass::invalid_initial: return "invalid_initial";
        case TransitionClass::unitary_inaccessible: return "unitary_inaccessible";
        case TransitionClass::unitary_only: return "unitary_only";
        case TransitionClass::noise_accessible: return "noise_accessible";
    }
    return "?";
}

size_t ReachabilityGrid::count(TransitionClass c) const {
    return static_cast<size_t>(std::count(cells.begin(), cells.end(), c));
}

TransitionClass classify_transition(double Pi, double Pf, const NoiseRates& rates, double C0,
                                    double t_f, int n_t, double feas_tol) {
    if (n_t < 100) throw DomainError("classify_transition: need n_t >= 100 time samples");
    if (Pi < 0.0 || Pi > 1.0 || Pf < 0.0 || Pf > 1.0 || C0 < 0.0) {
        return TransitionClass::invalid_initial;
    }
    const double k = Pi - Pi * Pi - C0 * C0;
    if (k < 0.0) return TransitionClass::invalid_initial;

    const auto pop = PopulationProfile::sine_squared(Pi, Pf, t_f);
    CoherenceOptions opts;
    opts.feas_grid = n_t;
    opts.feas_tol = feas_tol;
    const auto noisy = CoherenceSolution::solve(pop, rates, C0, opts);

    double min_unitary = coherence_unitary_sq(Pi, k);
    for (int i = 1; i < n_t; ++i) {
        const double t = t_f * static_cast<double>(i) / (n_t - 1);
        min_unitary = std::min(min_unitary, coherence_unitary_sq(pop.value(t), k));
    }

    if (noisy.feasible()) return TransitionClass::noise_accessible;
    if (min_unitary >= -feas_tol) return TransitionClass::unitary_only;
    return TransitionClass::unitary_inaccessible;
}

ReachabilityGrid accessibility_map(const NoiseRates& rates, double C0, double t_f, int n_grid,
                                   int n_t, int workers, double feas_tol) {
    if (n_grid < 2) throw DomainError("accessibility_map: need n_grid >= 2");
    ReachabilityGrid grid;
    grid.gamma = rates.gamma;
    grid.Gamma = rates.Gamma;
    grid.nbar = rates.nbar;
    grid.C0 = C0;
    grid.t_f = t_f;
    grid.n_grid = n_grid;
    grid.n_t = n_t;
    grid.feas_tol = feas_tol;
    grid.Pi_axis.resize(n_grid);
    grid.Pf_axis.resize(n_grid);
    for (int i = 0; i < n_grid; ++i) {
        grid.Pi_axis[i] = static_cast<double>(i) / (n_grid - 1);
        grid.Pf_axis[i] = static_cast<double>(i) / (n_grid - 1);
    }
    grid.cells.assign(static_cast<size_t>(n_grid) * n_grid, TransitionClass::invalid_initial);

    int n_workers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    n_workers = std::clamp(n_workers, 1, n_grid);

    auto work = [&](int w) {
        for (int i = w; i < n_grid; i += n_workers) {
            const double Pi = grid.Pi_axis[i];
            for (int j = 0; j < n_grid; ++j) {
                grid.cells[static_cast<size_t>(i) * n_grid + j] =
                    classify_transition(Pi, grid.Pf_axis[j], rates, C0, t_f, n_t, feas_tol);
            }
        }
    };
    if (n_workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    return grid;
}

std::vector<CurvePoint> asymptotic_curve(const NoiseRates& rates, int n_points) {
    if (!(rates.Gamma_tilde > 0.0)) {
        throw DomainError("asymptotic_curve: requires Gamma_tilde > 0");
    }
    if (n_points < 2) throw DomainError("asymptotic_curve: need n_points >= 2");
    std::vector<CurvePoint> out(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double P = static_cast<double>(i) / (n_points - 1);
        const double csq = asymptotic_coherence_sq(P, rates);
        out[i] = CurvePoint{P, csq > 0.0 ? std::sqrt(csq) : 0.0, csq < 0.0};
    }
    return out;
}

}  // namespace tlc
