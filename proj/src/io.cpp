#include "tlc/io.hpp"

#include <cstdio>
#include <fstream>

namespace tlc {

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
    if (!f) throw DomainError("cannot open output file: " + path);
    return f;
}

}  // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_waveform_csv(const std::string& path, const std::vector<FieldSample>& samples) {
    auto f = open_out(path);
    f << "t,E,A,Lambda,X,Y\n";
    for (const auto& s : samples) {
        f << format_g17(s.t) << ',' << format_g17(s.E) << ',' << format_g17(s.A) << ','
          << format_g17(s.Lambda) << ',' << format_g17(s.X) << ',' << format_g17(s.Y) << '\n';
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj, int n_samples) {
    auto f = open_out(path);
    f << "t,P_num,C_num,Phi_num,rho01_re,rho01_im\n";
    const size_t n = traj.size();
    size_t stride = 1;
    if (n_samples > 1 && n > static_cast<size_t>(n_samples)) {
        stride = (n - 1) / (n_samples - 1);
    }
    for (size_t i = 0; i < n; i += stride) {
        f << format_g17(traj.t[i]) << ',' << format_g17(traj.P_num[i]) << ','
          << format_g17(traj.C_num[i]) << ',' << format_g17(traj.Phi_num[i]) << ','
          << format_g17(traj.re01[i]) << ',' << format_g17(traj.im01[i]) << '\n';
    }
    // always include the final sample
    if (stride != 1 && (n - 1) % stride != 0) {
        const size_t i = n - 1;
        f << format_g17(traj.t[i]) << ',' << format_g17(traj.P_num[i]) << ','
          << format_g17(traj.C_num[i]) << ',' << format_g17(traj.Phi_num[i]) << ','
          << format_g17(traj.re01[i]) << ',' << format_g17(traj.im01[i]) << '\n';
    }
}

void write_grid_csv(const std::string& path, const ReachabilityGrid& grid) {
    auto f = open_out(path);
    f << "Pi,Pf,class\n";
    const int n_pi = static_cast<int>(grid.Pi_axis.size());
    const int n_pf = static_cast<int>(grid.Pf_axis.size());
    for (int i = 0; i < n_pi; ++i) {
        for (int j = 0; j < n_pf; ++j) {
            f << format_g17(grid.Pi_axis[i]) << ',' << format_g17(grid.Pf_axis[j]) << ','
              << static_cast<int>(grid.at(i, j)) << '\n';
        }
    }
}

void write_grid_pgm(const std::string& path, const ReachabilityGrid& grid) {
    auto f = open_out(path, true);
    const int n_pi = static_cast<int>(grid.Pi_axis.size());
    const int n_pf = static_cast<int>(grid.Pf_axis.size());
    f << "P5\n";
    f << "# transition map; columns Pi in [0,1], row 0 is Pf=1 (Pf decreases downward); "
      << "gray: 255 unitary-inaccessible, 170 unitary-only, 85 noise-accessible, 0 invalid; "
      << "gamma=" << format_g17(grid.gamma) << " Gamma=" << format_g17(grid.Gamma)
      << " nbar=" << format_g17(grid.nbar) << " C0=" << format_g17(grid.C0)
      << " t_f=" << format_g17(grid.t_f) << " n_t=" << grid.n_t << "\n";
    f << n_pi << ' ' << n_pf << "\n255\n";
    static constexpr unsigned char gray[4] = {0, 255, 170, 85};
    std::string row(static_cast<size_t>(n_pi), '\0');
    for (int j = n_pf - 1; j >= 0; --j) {
        for (int i = 0; i < n_pi; ++i) {
            row[static_cast<size_t>(i)] =
                static_cast<char>(gray[static_cast<int>(grid.at(i, j))]);
        }
        f.write(row.data(), row.size());
    }
}

void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve) {
    auto f = open_out(path);
    f << "P,Cinf,clamped\n";
    for (const auto& p : curve) {
        f << format_g17(p.P) << ',' << format_g17(p.Cinf) << ',' << (p.clamped ? 1 : 0) << '\n';
    }
}

void write_steady_csv(const std::string& path, const std::vector<SteadyRow>& rows) {
    auto f = open_out(path);
    f << "P,Cinf,required_C0,k,feasible\n";
    for (const auto& r : rows) {
        f << format_g17(r.P) << ',' << format_g17(r.Cinf) << ',' << format_g17(r.required_C0)
          << ',' << format_g17(r.k) << ',' << (r.feasible ? 1 : 0) << '\n';
    }
}

}  // namespace tlc
