// Times the serial reference path against the OpenMP path for the three
// data-parallel kernels and checks the outputs are bit-identical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ablation/fd_oracle.hpp"
#include "ablation/finite_spectral.hpp"
#include "ablation/infinite_parabolic.hpp"
#include "ablation/parallel.hpp"
#include "ablation/params.hpp"
#include "ablation/profile.hpp"

namespace {

using namespace ablation;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

struct Row {
    std::string name;
    double serial_ms;
    double parallel_ms;
    double max_diff;
};

template <class F>
Row run_case(const std::string& name, F&& work) {
    set_threads(1);
    auto t0 = clock_type::now();
    const std::vector<double> serial = work();
    const double serial_ms = ms_since(t0);

    set_threads(0);
    t0 = clock_type::now();
    const std::vector<double> parallel = work();
    const double parallel_ms = ms_since(t0);

    double diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        diff = std::max(diff, std::abs(serial[i] - parallel[i]));
    }
    return {name, serial_ms, parallel_ms, diff};
}

} // namespace

int main(int argc, char** argv) {
    init_threads_from_env();
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";

    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);

    std::vector<Row> rows;

    {
        const int nr = quick ? 400 : 2000;
        const double t_end = quick ? 2.0 : 40.0;
        const fd_oracle::Grid g =
            fd_oracle::make_grid(p, dp, fd_oracle::Scheme::ExplicitParabolic, nr, t_end);
        rows.push_back(run_case("fd parabolic march", [&] {
            return fd_oracle::solve_parabolic(p, dp, g).T;
        }));
    }
    {
        const int nr = quick ? 400 : 4000;
        const double t_end = quick ? 20.0 : 200.0;
        const fd_oracle::Grid g =
            fd_oracle::make_grid(p, dp, fd_oracle::Scheme::ExplicitHyperbolic, nr, t_end);
        rows.push_back(run_case("fd hyperbolic march", [&] {
            return fd_oracle::solve_hyperbolic(p, dp, g).T;
        }));
    }
    {
        const int n_max = quick ? 64 : 400;
        rows.push_back(run_case("eigen + coefficients", [&] {
            finite_spectral::SeriesControl sc;
            sc.n_max = n_max;
            auto modes = finite_spectral::eigen_modes(p, sc.n_max);
            finite_spectral::fourier_coefficients(modes, p, dp, sc);
            std::vector<double> flat;
            flat.reserve(2 * modes.size());
            for (const auto& m : modes) {
                flat.push_back(m.k_n);
                flat.push_back(m.c_n);
            }
            return flat;
        }));
    }
    {
        const int nt = quick ? 8 : 24;
        const int nr = quick ? 8 : 24;
        finite_spectral::SeriesControl sc;
        sc.n_max = quick ? 64 : 200;
        auto modes = finite_spectral::eigen_modes(p, sc.n_max);
        finite_spectral::fourier_coefficients(modes, p, dp, sc);
        const auto ts = make_axis(1.0, 500.0, nt, true);
        const auto rs = make_axis(p.r0, *p.r1, nr, false);
        rows.push_back(run_case("series grid evaluation", [&] {
            std::vector<double> T(ts.size() * rs.size());
            parallel_for(static_cast<std::int64_t>(T.size()), [&](std::int64_t idx) {
                const std::size_t it = static_cast<std::size_t>(idx) / rs.size();
                const std::size_t ir = static_cast<std::size_t>(idx) % rs.size();
                T[idx] = finite_spectral::series_temperature(ts[it], rs[ir], modes, p, dp,
                                                             finite_spectral::Model::Hyperbolic)
                             .T;
            });
            return T;
        }));
    }

    std::printf("%-24s %12s %12s %9s %12s\n", "kernel", "serial [ms]", "openmp [ms]", "speedup",
                "max |diff|");
    bool identical = true;
    for (const Row& r : rows) {
        std::printf("%-24s %12.2f %12.2f %9.2fx %12.3g\n", r.name.c_str(), r.serial_ms,
                    r.parallel_ms, r.serial_ms / std::max(r.parallel_ms, 1e-9), r.max_diff);
        identical = identical && r.max_diff == 0.0;
    }
    std::printf("outputs bit-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
