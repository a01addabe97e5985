#include "ablation/finite_spectral.hpp"

#include <cmath>
#include <numbers>

#include "ablation/errors.hpp"
#include "ablation/parallel.hpp"

namespace ablation {
namespace finite_spectral {

namespace {

constexpr double kPi = std::numbers::pi;

double require_finite_shell(const PhysicalParams& p) {
    if (!p.r1) throw param_error("r1", "finite-shell operation needs an outer radius");
    return *p.r1;
}

double sinhc(double z) {
    if (std::abs(z) < 1e-5) return 1.0 + z * z / 6.0;
    return std::sinh(z) / z;
}

// Root of G(delta) = k(delta) r0 sin(delta) - cos(delta) on (0, pi/2), where
// k(delta) = ((2n+1) pi/2 + delta)/L. G is strictly increasing with G(0) < 0,
// so plain bisection is bulletproof; a few Newton polishes sharpen the tail.
double solve_delta(int n, double r0, double L) {
    const double base = (2.0 * n + 1.0) * kPi / 2.0;
    const double c = r0 / L;
    auto G = [&](double delta) {
        return c * (base + delta) * std::sin(delta) - std::cos(delta);
    };
    double lo = 0.0, hi = kPi / 2.0;
    for (int it = 0; it < 90; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (G(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double delta = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double g = G(delta);
        const double gp = c * std::sin(delta) + c * (base + delta) * std::cos(delta) + std::sin(delta);
        const double step = g / gp;
        const double next = delta - step;
        if (next > lo && next < hi) delta = next;
    }
    return delta;
}

} // namespace

std::vector<EigenMode> eigen_modes(const PhysicalParams& p, int n_max) {
    const double r1 = require_finite_shell(p);
    if (n_max < 1) throw param_error("n_max", "need at least one mode");
    const double L = r1 - p.r0;
    std::vector<EigenMode> modes(n_max);
    parallel_for(n_max, [&](std::int64_t n) {
        EigenMode& m = modes[n];
        m.n = static_cast<int>(n);
        m.delta = solve_delta(m.n, p.r0, L);
        const double theta = (2.0 * n + 1.0) * kPi / 2.0 + m.delta;
        m.k_n = theta / L;
        // norm^2 = L/2 - sin(2 k L)/(4k); sin(2 k L) = -sin(2 delta) exactly.
        m.norm = std::sqrt(L / 2.0 + std::sin(2.0 * m.delta) / (4.0 * m.k_n));
    });
    return modes;
}

std::vector<double> eigenvalues(const PhysicalParams& p, int n_max) {
    const auto modes = eigen_modes(p, n_max);
    std::vector<double> k(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) k[i] = modes[i].k_n;
    return k;
}

double eigen_residual(const EigenMode& m, const PhysicalParams& p) {
    // tan(k L) = tan((2n+1)pi/2 + delta) = -cot(delta), an exact reduction.
    const double cot = std::cos(m.delta) / std::sin(m.delta);
    return std::abs(-cot + m.k_n * p.r0) / (1.0 + m.k_n * p.r0);
}

double eigenfunction(const EigenMode& m, double r, const PhysicalParams& p) {
    const double r1 = require_finite_shell(p);
    if (!(r >= p.r0) || !(r <= r1)) throw std::domain_error("eigenfunction: r outside shell");
    return std::sin(m.k_n * (r1 - r)) / m.norm;
}

double expansion_target(double r, const PhysicalParams& p, const DerivedParams& dp) {
    const double r1 = require_finite_shell(p);
    return dp.b / (2.0 * r) - dp.b / p.r0 +
           r * (dp.b / (p.r0 * r1) - dp.b / (2.0 * r1 * r1));
}

void fourier_coefficients(std::vector<EigenMode>& modes, const PhysicalParams& p,
                          const DerivedParams& dp, const SeriesControl& sc) {
    const double r1 = require_finite_shell(p);
    std::vector<unsigned char> failed(modes.size(), 0);
    std::vector<double> errs(modes.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(modes.size()), [&](std::int64_t i) {
        EigenMode& m = modes[i];
        auto f = [&](double r) {
            return expansion_target(r, p, dp) * std::sin(m.k_n * (r1 - r)) / m.norm;
        };
        QuadratureControl qc = sc.coeff_quadrature;
        // Budget scales with the oscillation count of the mode.
        qc.max_subdivisions = std::max(qc.max_subdivisions, 16 * (m.n + 4));
        const IntegralResult res = integrate(f, p.r0, r1, qc);
        m.c_n = res.value;
        errs[i] = res.est_error;
        failed[i] = res.converged ? 0 : 1;
    });
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (failed[i]) {
            throw accuracy_error("fourier_coefficients: quadrature did not converge",
                                 modes[i].c_n, errs[i]);
        }
    }
}

void coefficient_split_finite(std::vector<EigenMode>& modes, const DerivedParams& dp,
                              double tau, Model model) {
    for (EigenMode& m : modes) {
        const OmegaRoots w = omega_roots(m.k_n, dp, tau);
        m.branch = w.branch;
        if (model == Model::Parabolic) {
            m.a_n = m.c_n;
            m.b_n = 0.0;
            continue;
        }
        if (w.branch == OmegaBranch::CriticalDouble) {
            m.a_n = m.c_n;
            m.b_n = 0.0;
            continue;
        }
        const std::complex<double> a =
            m.c_n * w.omega_minus / (w.omega_minus - w.omega_plus);
        m.a_n = a;
        m.b_n = m.c_n - a;
    }
}

double mode_time_factor(double k, double t, const DerivedParams& dp, double tau, Model model) {
    if (model == Model::Parabolic) return std::exp(-dp.a * k * k * t);
    const double mu = -1.0 / (2.0 * tau);
    const double disc = (dp.a / tau) * (dp.k0 - k) * (dp.k0 + k);
    if (disc > 0.0) {
        const double dlt = std::sqrt(disc);
        if (dlt * t < 30.0) {
            return std::exp(mu * t) * (std::cosh(dlt * t) + t / (2.0 * tau) * sinhc(dlt * t));
        }
        const double wp = mu + dlt;
        const double wm = mu - dlt;
        const double q = 1.0 / (2.0 * tau * dlt);
        return 0.5 * ((1.0 + q) * std::exp(wp * t) + (1.0 - q) * std::exp(wm * t));
    }
    if (disc < 0.0) {
        const double nu = std::sqrt(-disc);
        return std::exp(mu * t) * (std::cos(nu * t) + std::sin(nu * t) / (2.0 * tau * nu));
    }
    return std::exp(mu * t) * (1.0 + t / (2.0 * tau));
}

double steady_state_finite(double r, const PhysicalParams& p, const DerivedParams& dp) {
    const double r1 = require_finite_shell(p);
    if (!(r >= p.r0) || !(r <= r1)) throw std::domain_error("steady_state_finite: r outside shell");
    return p.T_ambient - dp.b / (p.r0 * r1) + dp.b / (2.0 * r1 * r1) + dp.b / (p.r0 * r) -
           dp.b / (2.0 * r * r);
}

SeriesValue series_temperature(double t, double r, const std::vector<EigenMode>& modes,
                               const PhysicalParams& p, const DerivedParams& dp, Model model) {
    const double r1 = require_finite_shell(p);
    if (!(r >= p.r0) || !(r <= r1)) throw std::domain_error("series_temperature: r outside shell");
    if (modes.empty()) throw param_error("modes", "empty mode table");

    // Smallest terms first.
    double sum = 0.0;
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
        const double F = mode_time_factor(it->k_n, t, dp, p.tau, model);
        sum += it->c_n * F * std::sin(it->k_n * (r1 - r)) / it->norm;
    }
    SeriesValue out;
    out.T = steady_state_finite(r, p, dp) + sum / r;
    const EigenMode& last = modes.back();
    out.trunc_estimate = std::abs(last.c_n) / (last.norm * r);
    return out;
}

DecayRate slowest_decay_rate(const std::vector<EigenMode>& modes, const DerivedParams& dp,
                             double tau, Model model) {
    if (modes.empty()) throw param_error("modes", "empty mode table");
    const double k0 = modes.front().k_n;
    DecayRate out;
    if (model == Model::Hyperbolic && k0 >= dp.k0) {
        out.rate = -1.0 / (2.0 * tau);
        out.first_mode_supercritical = true;
        return out;
    }
    out.rate = -dp.a * k0 * k0;
    return out;
}

} // namespace finite_spectral
} // namespace ablation
