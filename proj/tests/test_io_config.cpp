#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "tlc/config.hpp"
#include "tlc/figures.hpp"
#include "tlc/io.hpp"

using namespace tlc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path temp_dir() {
    auto d = fs::temp_directory_path() / "tlc_io_tests";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("format_g17 round-trips doubles exactly") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> e(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::ldexp(u(rng), e(rng) / 10);
        const std::string s = format_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_g17(0.1) == "0.10000000000000001");
}

TEST_CASE("every bundled figure config parses and validates") {
    for (const auto& id : figure_ids()) {
        for (const auto& fc : figure_bundle(id)) {
            const auto cfg = parse_config(fc.config);
            CHECK(cfg.label.substr(0, 3) == "fig");
            CHECK(cfg.system.omega == 0.02);
            CHECK(cfg.system.mu == 6.0);
        }
    }
}

TEST_CASE("config rejects unknown keys, wrong types and missing requireds") {
    using nlohmann::json;
    json good = figure_bundle("2")[0].config;
    CHECK_NOTHROW(parse_config(good));

    json unknown = good;
    unknown["typo_key"] = 1;
    CHECK_THROWS_WITH_AS(parse_config(unknown), doctest::Contains("typo_key"), ConfigError);

    json unknown_nested = good;
    unknown_nested["noise"]["Nbar"] = 0.3;
    CHECK_THROWS_AS(parse_config(unknown_nested), ConfigError);

    json missing_mu = good;
    missing_mu["system"].erase("mu");
    CHECK_THROWS_WITH_AS(parse_config(missing_mu), doctest::Contains("mu"), ConfigError);

    json bad_type = good;
    bad_type["t_f"] = "long";
    CHECK_THROWS_AS(parse_config(bad_type), ConfigError);

    json bad_phase = good;
    bad_phase["phase"] = {{"kind", "spline"}};
    CHECK_THROWS_AS(parse_config(bad_phase), ConfigError);

    json neg = good;
    neg["noise"]["gamma"] = -1.0;
    CHECK_THROWS_AS(parse_config(neg), ConfigError);
}

TEST_CASE("profile construction from config specs") {
    const auto cfg = parse_config(figure_bundle("8")[0].config);
    auto pop = cfg.build_population();
    CHECK(pop.kind() == PopulationKind::sine_squared);
    CHECK(pop.value(0.0) == 0.2);
    auto phase = cfg.build_phase();
    CHECK(phase.kind() == PhaseKind::quadratic);
    CHECK(phase.eval(1000.0).Phidot == 0.0);
    CHECK(cfg.require_C0() == 0.2);
}

TEST_CASE("waveform and trajectory CSV layout") {
    const auto dir = temp_dir();
    const std::string wf = (dir / "wf.csv").string();
    std::vector<FieldSample> samples = {{0.0, 1.0, 2.0, 3.0, 4.0, 5.0},
                                        {1.0, -1.0, -2.0, -3.0, -4.0, -5.0}};
    write_waveform_csv(wf, samples);
    const std::string text = slurp(wf);
    CHECK(text.substr(0, 15) == "t,E,A,Lambda,X,");
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.back() == '\n');

    Trajectory traj;
    traj.frame = Frame::rotating;
    for (int i = 0; i < 100; ++i) {
        traj.t.push_back(i);
        traj.rho00.push_back(0.5);
        traj.re01.push_back(0.1);
        traj.im01.push_back(0.0);
    }
    extract_phase(traj, 0.0);
    const std::string tr = (dir / "traj.csv").string();
    write_trajectory_csv(tr, traj, 10);
    const std::string text2 = slurp(tr);
    CHECK(text2.substr(0, 36) == "t,P_num,C_num,Phi_num,rho01_re,rho01");
    // thinned to roughly n_samples rows plus header and forced final row
    const auto rows = std::count(text2.begin(), text2.end(), '\n');
    CHECK(rows >= 10);
    CHECK(rows <= 14);
}

TEST_CASE("grid CSV and PGM bytes") {
    ReachabilityGrid g;
    g.Pi_axis = {0.0, 1.0};
    g.Pf_axis = {0.0, 1.0};
    g.cells = {TransitionClass::invalid_initial, TransitionClass::unitary_inaccessible,
               TransitionClass::unitary_only, TransitionClass::noise_accessible};
    g.n_grid = 2;
    const auto dir = temp_dir();
    const std::string csv = (dir / "g.csv").string();
    write_grid_csv(csv, g);
    CHECK(slurp(csv) == "Pi,Pf,class\n0,0,0\n0,1,1\n1,0,2\n1,1,3\n");

    const std::string pgm = (dir / "g.pgm").string();
    write_grid_pgm(pgm, g);
    const std::string bytes = slurp(pgm);
    CHECK(bytes.substr(0, 3) == "P5\n");
    CHECK(bytes.find("2 2\n255\n") != std::string::npos);
    // last 4 bytes: rows from Pf=1 down: (Pi0,Pf1)=white(255), (Pi1,Pf1)=dark(85),
    // then (Pi0,Pf0)=invalid(0), (Pi1,Pf0)=light(170)
    const std::string pix = bytes.substr(bytes.size() - 4);
    CHECK(static_cast<unsigned char>(pix[0]) == 255);
    CHECK(static_cast<unsigned char>(pix[1]) == 85);
    CHECK(static_cast<unsigned char>(pix[2]) == 0);
    CHECK(static_cast<unsigned char>(pix[3]) == 170);
}

TEST_CASE("identical inputs produce byte-identical artifacts") {
    ReachabilityGrid g;
    g.Pi_axis = {0.0, 0.5, 1.0};
    g.Pf_axis = {0.0, 0.5, 1.0};
    g.cells.assign(9, TransitionClass::unitary_only);
    const auto dir = temp_dir();
    const std::string a = (dir / "a.pgm").string(), b = (dir / "b.pgm").string();
    write_grid_pgm(a, g);
    write_grid_pgm(b, g);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("steady and curve CSV writers") {
    const auto dir = temp_dir();
    const std::string s = (dir / "s.csv").string();
    write_steady_csv(s, {{0.5, 0.0, 0.0, 0.25, true}});
    CHECK(slurp(s) == "P,Cinf,required_C0,k,feasible\n0.5,0,0,0.25,1\n");
    const std::string c = (dir / "c.csv").string();
    write_curve_csv(c, {{0.5, 0.0, false}, {0.25, 0.0, true}});
    CHECK(slurp(c) == "P,Cinf,clamped\n0.5,0,0\n0.25,0,1\n");
}
