#include "ablation/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "ablation/errors.hpp"
#include "ablation/fd_oracle.hpp"
#include "ablation/finite_spectral.hpp"
#include "ablation/infinite_hyperbolic.hpp"
#include "ablation/infinite_parabolic.hpp"
#include "ablation/params.hpp"
#include "ablation/quadrature.hpp"
#include "ablation/specfun.hpp"

namespace ablation {
namespace verify {

namespace {

constexpr double kPi = std::numbers::pi;

void add(std::vector<CheckResult>& out, const std::string& name, bool ok, double measured,
         double bound) {
    std::ostringstream ss;
    ss << "measured " << measured << ", bound " << bound;
    out.push_back({name, ok, ss.str()});
}

void suite_params(std::vector<CheckResult>& out) {
    PhysicalParams p = default_case();
    DerivedParams dp = derive_params(p);

    std::mt19937_64 rng(20240817u);
    std::uniform_real_distribution<double> uk(0.0, 4.0), ua(-6.0, 0.0), ut(-3.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        PhysicalParams q = p;
        q.kappa = std::pow(10.0, ua(rng)) * q.rho * q.c; // a in [1e-6, 1]
        q.tau = std::pow(10.0, ut(rng));
        DerivedParams dq = derive_params(q);
        const double k = uk(rng) * dq.k0;
        const OmegaRoots w = omega_roots(k, dq, q.tau);
        const std::complex<double> sum = w.omega_plus + w.omega_minus;
        const std::complex<double> prod = w.omega_plus * w.omega_minus;
        worst = std::max(worst, std::abs(sum + 1.0 / q.tau) * q.tau);
        worst = std::max(worst,
                         std::abs(prod - dq.a * k * k / q.tau) /
                             std::max(dq.a * k * k / q.tau, 1e-300));
    }
    add(out, "omega root identities (1000 random samples)", worst < 1e-12, worst, 1e-12);

    const double ws_eps = std::abs(dp.wave_speed * dp.wave_speed * dp.eps - 1.0);
    add(out, "wave_speed^2 * eps == 1", ws_eps < 1e-14, ws_eps, 1e-14);

    const double k0 = dp.k0;
    const bool flip = omega_roots(std::nextafter(k0, 0.0), dp, p.tau).branch ==
                          OmegaBranch::SubcriticalRealPair &&
                      omega_roots(std::nextafter(k0, 2.0 * k0), dp, p.tau).branch ==
                          OmegaBranch::SupercriticalComplexPair &&
                      omega_roots(k0, dp, p.tau).branch == OmegaBranch::CriticalDouble;
    add(out, "branch classification flips at k0 within one ulp", flip, flip ? 0.0 : 1.0, 0.0);
}

void suite_specfun(std::vector<CheckResult>& out) {
    // dD/dx = 1 - 2 x D against central differences.
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng);
        const double h = 1e-5;
        const double fd = (dawson(x + h) - dawson(x - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - (1.0 - 2.0 * x * dawson(x))));
    }
    add(out, "dawson derivative relation (100 random points)", worst < 1e-6, worst, 1e-6);

    const double simax = std::abs(sine_integral(100.0) - kPi / 2.0);
    add(out, "Si(100) near pi/2", simax < 0.02, simax, 0.02);

    // S1 differential identity u dS1/ds + s dS1/du = e^s - cos u (partial
    // integration of the smooth-variable form; checked at s=0 analytically).
    double res_worst = 0.0;
    for (double s : {-2.0, 0.5, 2.5}) {
        for (double u : {0.4, 1.7, 4.0}) {
            const double h = 1e-4;
            QuadratureControl qc{1e-12, 1e-12, 2000};
            const double dss = (s1(s + h, u, qc).value - s1(s - h, u, qc).value) / (2.0 * h);
            const double dsu = (s1(s, u + h, qc).value - s1(s, u - h, qc).value) / (2.0 * h);
            res_worst = std::max(res_worst,
                                 std::abs(u * dss + s * dsu - std::exp(s) + std::cos(u)));
        }
    }
    add(out, "S1 differential identity (3x3 grid)", res_worst < 1e-6, res_worst, 1e-6);

    const double ci_gap = std::abs(j2(+1, 1.0, 1.0).value + cosine_integral(1.0));
    add(out, "J2+(s,s) = -Ci(s) at s=1", ci_gap < 1e-6, ci_gap, 1e-6);

    const double m0 = std::abs(conf_hyp_m_1_32(0.0) - 1.0);
    add(out, "M(1,3/2,0) = 1", m0 < 1e-14, m0, 1e-14);
}

void suite_infinite_parabolic(std::vector<CheckResult>& out) {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    namespace ip = infinite_parabolic;

    const double r = 2.0 * p.r0;
    const auto us = ip::undershoot_time(r, dp, p);
    add(out, "undershoot time exists at r = 2 r0", us.found, us.t_star, 0.0);

    double gap = 0.0;
    if (us.found) {
        gap = std::abs(ip::transient(us.t_star, r, dp, p, ip::Mode::SmallElectrodeClosedForm) -
                       p.T_ambient);
    }
    const double tol = 1e-9 * dp.b / (p.r0 * p.r0);
    add(out, "T(t*) == T_inf at the undershoot root", us.found && gap < tol, gap, tol);

    const double t_late = 1e8 * p.r0 * p.r0 / dp.a;
    const double late = ip::transient(t_late, r, dp, p, ip::Mode::SmallElectrodeClosedForm);
    add(out, "late-time value falls below T_inf", late < p.T_ambient,
        late - p.T_ambient, 0.0);
}

void suite_infinite_hyperbolic(std::vector<CheckResult>& out) {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    namespace ih = infinite_hyperbolic;

    double worst = 0.0;
    for (double r : {1.5 * p.r0, 3.0 * p.r0, 8.0 * p.r0}) {
        worst = std::max(worst,
                         std::abs(ih::temperature_spectral(0.0, r, dp, p) - p.T_ambient));
    }
    const double tol = 1e-4 * dp.b / (2.0 * p.r0 * p.r0);
    add(out, "assembled T(0, r) reconstructs T_inf (3 radii)", worst < tol, worst, tol);

    const double z0 = ih::zero_mode_term(0.0, 2.0 * p.r0, dp, p);
    const double zinf = ih::zero_mode_term(1e9 * p.tau, 2.0 * p.r0, dp, p);
    const double zlim = dp.b / (p.r0 * 2.0 * p.r0);
    const bool ends = z0 == 0.0 && std::abs(zinf - zlim) < 1e-12 * zlim;
    add(out, "zero-mode term endpoints (0 and b/(r0 r))", ends,
        std::abs(zinf - zlim), 1e-12 * zlim);

    const auto [f1, g1] = ih::coefficient_split(dp.k0 / 2.0, dp, p);
    const OmegaRoots w = omega_roots(dp.k0 / 2.0, dp, p.tau);
    const double cond =
        std::abs(w.omega_plus.real() * f1 + w.omega_minus.real() * g1) / (dp.b / 2.0);
    add(out, "mode-wise second initial condition w+ f1 + w- g1 = 0", cond < 1e-12, cond, 1e-12);
}

void suite_finite_spectral(std::vector<CheckResult>& out) {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    namespace fs = finite_spectral;

    auto modes = fs::eigen_modes(p, 50);
    double worst_res = 0.0;
    for (const auto& m : modes) worst_res = std::max(worst_res, fs::eigen_residual(m, p));
    add(out, "eigenvalue residuals (n < 50)", worst_res < 1e-12, worst_res, 1e-12);

    double worst_orth = 0.0;
    QuadratureControl qc{1e-12, 1e-12, 4000};
    for (int i = 0; i < 5; ++i) {
        for (int j = i; j < 5; ++j) {
            const double g = integrate(
                                 [&](double r) {
                                     return fs::eigenfunction(modes[i], r, p) *
                                            fs::eigenfunction(modes[j], r, p);
                                 },
                                 p.r0, *p.r1, qc)
                                 .value;
            worst_orth = std::max(worst_orth, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    add(out, "orthonormality of the first 5 modes", worst_orth < 1e-10, worst_orth, 1e-10);

    fs::SeriesControl sc;
    sc.n_max = 50;
    fs::fourier_coefficients(modes, p, dp, sc);
    fs::coefficient_split_finite(modes, dp, p.tau, fs::Model::Hyperbolic);
    double worst_split = 0.0;
    for (const auto& m : modes) {
        worst_split = std::max(worst_split, std::abs(m.a_n + m.b_n - m.c_n));
    }
    add(out, "a_n + b_n == c_n after the hyperbolic split", worst_split < 1e-12, worst_split,
        1e-12);

    const double at_r1 =
        fs::series_temperature(0.37, *p.r1, modes, p, dp, fs::Model::Hyperbolic).T;
    const double gap_r1 = std::abs(at_r1 - p.T_ambient);
    add(out, "series equals T01 at the outer boundary", gap_r1 < 1e-11, gap_r1, 1e-11);
}

void suite_fd_oracle(std::vector<CheckResult>& out) {
    PhysicalParams p = default_case();
    p.r1 = 10e-3;
    PhysicalParams p0 = p;
    p0.V0 = 1e-30; // effectively zero source while keeping params valid
    const DerivedParams dp0 = derive_params(p0);
    namespace fd = fd_oracle;

    const fd::Grid g = fd::make_grid(p0, dp0, fd::Scheme::ExplicitParabolic, 200, 0.2);
    const TemperatureProfile prof = fd::solve_parabolic(p0, dp0, g);
    double drift = 0.0;
    for (double v : prof.T) drift = std::max(drift, std::abs(v - p0.T_ambient));
    add(out, "zero source preserves the uniform state", drift < 1e-13 * p0.T_ambient, drift,
        1e-13 * p0.T_ambient);

    const DerivedParams dp = derive_params(p);
    const fd::Grid gh = fd::make_grid(p, dp, fd::Scheme::ExplicitHyperbolic, 200, 5.0);
    const TemperatureProfile ph = fd::solve_hyperbolic(p, dp, gh);
    bool finite = true;
    for (double v : ph.T) finite = finite && std::isfinite(v);
    add(out, "hyperbolic march stays finite", finite, finite ? 0.0 : 1.0, 0.0);
}

} // namespace

std::vector<std::string> suite_names() {
    return {"params", "specfun", "infinite-parabolic", "infinite-hyperbolic",
            "finite-spectral", "fd-oracle"};
}

bool run_suite(const std::string& name, std::vector<CheckResult>& results) {
    if (name == "params")
        suite_params(results);
    else if (name == "specfun")
        suite_specfun(results);
    else if (name == "infinite-parabolic")
        suite_infinite_parabolic(results);
    else if (name == "infinite-hyperbolic")
        suite_infinite_hyperbolic(results);
    else if (name == "finite-spectral")
        suite_finite_spectral(results);
    else if (name == "fd-oracle")
        suite_fd_oracle(results);
    else if (name == "all") {
        for (const auto& s : suite_names()) run_suite(s, results);
    } else {
        return false;
    }
    return true;
}

bool report(std::ostream& out, const std::vector<CheckResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        all = all && r.passed;
    }
    return all;
}

} // namespace verify
} // namespace ablation
