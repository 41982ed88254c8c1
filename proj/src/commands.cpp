#include "tlc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tlc/io.hpp"
#include "tlc/reachability.hpp"

namespace tlc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.outputs.directory);
    return (fs::path(cfg.outputs.directory) / name).string();
}

void write_manifest(const ExperimentConfig& cfg, const std::string& command,
                    const std::vector<std::string>& outputs) {
    json m;
    m["tool"] = "tlc";
    m["version"] = kVersion;
    m["command"] = command;
    m["config"] = cfg.echo;
    m["outputs"] = outputs;
    std::ofstream f(out_path(cfg, cfg.label + "_manifest.json"));
    f << m.dump(2) << '\n';
}

void cross_check_initial(const ExperimentConfig& cfg, const PopulationProfile& pop,
                         const PhaseProfile& phase) {
    if (cfg.P0 && std::abs(*cfg.P0 - pop.value(0.0)) > 1e-9) {
        throw ConfigError("initial.P0 = " + std::to_string(*cfg.P0) +
                          " disagrees with the population profile at t = 0 (" +
                          std::to_string(pop.value(0.0)) + ")");
    }
    if (cfg.Phi0 && std::abs(*cfg.Phi0 - phase.value(0.0)) > 1e-6) {
        throw ConfigError("initial.Phi0 = " + std::to_string(*cfg.Phi0) +
                          " disagrees with the phase profile at t = 0 (" +
                          std::to_string(phase.value(0.0)) + ")");
    }
}

double circular_distance(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * 3.14159265358979323846));
}

}  // namespace

Pipeline build_pipeline(const ExperimentConfig& cfg) {
    PopulationProfile pop = cfg.build_population();
    PhaseProfile phase = cfg.build_phase();
    cross_check_initial(cfg, pop, phase);

    CoherenceOptions copts;
    copts.feas_tol = cfg.numerics.feas_tol;
    CoherenceSolution coh = CoherenceSolution::solve(pop, cfg.noise, cfg.require_C0(), copts);

    SynthesisOptions sopts;
    sopts.force = cfg.numerics.force;
    sopts.phase_tol = cfg.numerics.phase_tol;
    sopts.swap_thermal_rates = cfg.numerics.swap_thermal_rates;
    ControlField field = synthesize(pop, phase, coh, cfg.system, cfg.noise, sopts);
    return Pipeline{pop, phase, coh, field};
}

int cmd_synth(const ExperimentConfig& cfg) {
    Pipeline p = build_pipeline(cfg);
    const auto samples = p.field.sample_waveform(cfg.numerics.n_samples);

    double peak = 0.0;
    for (const auto& s : samples) peak = std::max(peak, std::abs(s.A));

    const std::string wf = out_path(cfg, cfg.label + "_waveform.csv");
    write_waveform_csv(wf, samples);
    write_manifest(cfg, "synth", {wf});

    std::cout << "synth: method=" << to_string(p.coh.method()) << " min_Csq=" << p.coh.min_csq()
              << (p.coh.feasible() ? " feasible" : " INFEASIBLE") << (p.field.forced() ? " (forced)" : "")
              << '\n';
    std::cout << "synth: envelope peak |A| = " << peak << '\n';
    const auto cross = p.pop.crossings();
    std::cout << "synth: crossings:";
    if (cross.whole_interval) std::cout << " whole-interval";
    for (double t : cross.times) std::cout << ' ' << t;
    std::cout << '\n';
    std::cout << "synth: wrote " << wf << '\n';
    return kExitOk;
}

int cmd_track(const ExperimentConfig& cfg, TrackReport* report_out) {
    Pipeline p = build_pipeline(cfg);
    const double t_f = cfg.require_t_f();
    const double dt = cfg.numerics.dt > 0.0 ? cfg.numerics.dt : default_lab_dt(cfg.system, t_f);

    const QubitState rho0 =
        make_qubit_state(p.pop.value(0.0), p.coh.value(0.0), p.phase.value(0.0));
    Trajectory traj = propagate_lab(cfg.system, cfg.noise, p.field, rho0, t_f, dt);

    TrackReport rep;
    for (size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.t[i];
        rep.max_pop_error = std::max(rep.max_pop_error, std::abs(traj.P_num[i] - p.pop.value(t)));
        if (traj.phase_defined[i]) {
            rep.max_phase_error = std::max(rep.max_phase_error,
                                           circular_distance(traj.Phi_num[i], p.phase.value(t)));
            rep.final_phase_error = circular_distance(traj.Phi_num[i], p.phase.value(t));
            ++rep.phase_samples;
        }
    }
    rep.final_pop_error = std::abs(traj.P_num.back() - p.pop.value(t_f));
    rep.passed = rep.max_pop_error <= cfg.numerics.tol_P &&
                 rep.max_phase_error <= cfg.numerics.tol_Phi;
    if (report_out) *report_out = rep;

    const std::string tr = out_path(cfg, cfg.label + "_trajectory.csv");
    write_trajectory_csv(tr, traj, cfg.numerics.n_samples);
    const std::string rp = out_path(cfg, cfg.label + "_track_report.txt");
    {
        std::ofstream f(rp);
        f << "max |rho00 - P|      : " << format_g17(rep.max_pop_error) << '\n';
        f << "max |Phi_num - Phi|  : " << format_g17(rep.max_phase_error) << " (circular, "
          << rep.phase_samples << " phase-defined samples)\n";
        f << "final population err : " << format_g17(rep.final_pop_error) << '\n';
        f << "final phase err      : " << format_g17(rep.final_phase_error) << '\n';
        f << "tolerances           : tol_P=" << format_g17(cfg.numerics.tol_P)
          << " tol_Phi=" << format_g17(cfg.numerics.tol_Phi) << '\n';
        f << "verdict              : " << (rep.passed ? "PASS" : "FAIL") << '\n';
    }
    write_manifest(cfg, "track", {tr, rp});

    std::cout << "track: max|P_num-P| = " << rep.max_pop_error
              << ", max|Phi_num-Phi| = " << rep.max_phase_error << " rad over "
              << rep.phase_samples << " samples -> " << (rep.passed ? "PASS" : "FAIL") << '\n';
    return rep.passed ? kExitOk : kExitTolerance;
}

int cmd_propagate(const ExperimentConfig& cfg) {
    Pipeline p = build_pipeline(cfg);
    const double t_f = cfg.require_t_f();
    const double dt = cfg.numerics.dt > 0.0 ? cfg.numerics.dt : default_lab_dt(cfg.system, t_f);
    const QubitState rho0 =
        make_qubit_state(p.pop.value(0.0), p.coh.value(0.0), p.phase.value(0.0));
    Trajectory traj = propagate_lab(cfg.system, cfg.noise, p.field, rho0, t_f, dt);

    const std::string tr = out_path(cfg, cfg.label + "_trajectory.csv");
    write_trajectory_csv(tr, traj, cfg.numerics.n_samples);
    write_manifest(cfg, "propagate", {tr});
    std::cout << "propagate: final rho00 = " << traj.P_num.back()
              << ", |rho01| = " << traj.C_num.back() << '\n';
    return kExitOk;
}

int cmd_reach(const ExperimentConfig& cfg) {
    const auto grid =
        accessibility_map(cfg.noise, cfg.require_C0(), cfg.require_t_f(), cfg.numerics.grid_n,
                          cfg.numerics.time_samples, cfg.numerics.workers, cfg.numerics.feas_tol);
    std::vector<std::string> outputs;
    if (cfg.outputs.csv) {
        const std::string path = out_path(cfg, cfg.label + "_map.csv");
        write_grid_csv(path, grid);
        outputs.push_back(path);
    }
    if (cfg.outputs.pgm) {
        const std::string path = out_path(cfg, cfg.label + "_map.pgm");
        write_grid_pgm(path, grid);
        outputs.push_back(path);
    }
    write_manifest(cfg, "reach", outputs);
    std::cout << "reach: " << grid.n_grid << "x" << grid.n_grid
              << " cells: invalid=" << grid.count(TransitionClass::invalid_initial)
              << " white=" << grid.count(TransitionClass::unitary_inaccessible)
              << " light=" << grid.count(TransitionClass::unitary_only)
              << " dark=" << grid.count(TransitionClass::noise_accessible) << '\n';
    return kExitOk;
}

int cmd_steady(const ExperimentConfig& cfg) {
    std::vector<NoiseOverride> entries = cfg.sweep;
    if (entries.empty()) entries.push_back(NoiseOverride{});
    std::vector<std::string> outputs;
    for (const auto& e : entries) {
        const NoiseRates rates = cfg.rates_with(e);
        if (!(rates.Gamma > 0.0)) {
            throw InfeasibleError(
                "steady: no nontrivial steady coherence without thermal noise (Gamma = 0)");
        }
        const int n = cfg.numerics.grid_n;
        std::vector<SteadyRow> rows;
        rows.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double P = static_cast<double>(i) / (n - 1);
            const auto a = asymptotic_coherence(P, rates);
            const auto s = steady_state_coherence(P, rates);
            rows.push_back(SteadyRow{P, a.Cinf, s.C0, s.k, s.feasible});
        }
        const std::string path = out_path(cfg, cfg.label + e.suffix() + "_steady.csv");
        write_steady_csv(path, rows);
        outputs.push_back(path);
        std::cout << "steady: wrote " << path << '\n';
    }
    write_manifest(cfg, "steady", outputs);
    return kExitOk;
}

int cmd_coherence(const ExperimentConfig& cfg) {
    PopulationProfile pop = cfg.build_population();
    const double C0 = cfg.require_C0();
    std::vector<NoiseOverride> entries = cfg.sweep;
    if (entries.empty()) entries.push_back(NoiseOverride{});
    std::vector<std::string> outputs;
    for (const auto& e : entries) {
        const NoiseRates rates = cfg.rates_with(e);
        CoherenceOptions copts;
        copts.feas_tol = cfg.numerics.feas_tol;
        const auto sol = CoherenceSolution::solve(pop, rates, C0, copts);

        const std::string path = out_path(cfg, cfg.label + e.suffix() + "_coherence.csv");
        std::ofstream f(path);
        if (!f) throw DomainError("cannot open output file: " + path);
        f << "t,C,Csq\n";
        const int n = cfg.numerics.n_samples;
        for (int i = 0; i < n; ++i) {
            const double t = pop.t_f() * static_cast<double>(i) / (n - 1);
            const double csq = sol.csq(t);
            f << format_g17(t) << ',' << format_g17(sol.value(t)) << ',' << format_g17(csq)
              << '\n';
        }
        outputs.push_back(path);
        std::cout << "coherence: " << path << " min_Csq=" << sol.min_csq()
                  << (sol.feasible() ? " feasible" : " INFEASIBLE") << '\n';
    }
    write_manifest(cfg, "coherence", outputs);
    return kExitOk;
}

int run_command(const std::string& command, const ExperimentConfig& cfg) {
    if (command == "synth") return cmd_synth(cfg);
    if (command == "track") return cmd_track(cfg);
    if (command == "propagate") return cmd_propagate(cfg);
    if (command == "reach") return cmd_reach(cfg);
    if (command == "steady") return cmd_steady(cfg);
    if (command == "coherence") return cmd_coherence(cfg);
    throw ConfigError("unknown command '" + command + "'");
}

int run_guarded(const std::string& command, const ExperimentConfig& cfg) {
    try {
        return run_command(command, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const SingularFieldError& e) {
        std::cerr << "singular field: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace tlc
