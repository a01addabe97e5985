#include "ablation/infinite_parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ablation/errors.hpp"
#include "ablation/specfun.hpp"

namespace ablation {
namespace infinite_parabolic {

namespace {
constexpr double kPi = std::numbers::pi;

// sin(x) - x cos(x), series-protected near 0.
double sin_minus_xcos(double x) {
    if (std::abs(x) < 0.1) {
        const double x2 = x * x;
        // x^3/3 - x^5/30 + x^7/840 - x^9/45360
        return x * x2 * (1.0 / 3.0 + x2 * (-1.0 / 30.0 + x2 * (1.0 / 840.0 - x2 / 45360.0)));
    }
    return std::sin(x) - x * std::cos(x);
}
} // namespace

double steady_state(double r, const DerivedParams& dp, const PhysicalParams& p) {
    if (!(r >= p.r0)) throw std::domain_error("steady_state: r below electrode radius");
    return p.T_ambient + dp.b / (p.r0 * r) - dp.b / (2.0 * r * r);
}

double f1_exact(double k, const DerivedParams& dp, const PhysicalParams& p) {
    if (!(k > 0.0)) throw std::domain_error("f1_exact: requires k > 0");
    const double x = k * p.r0;
    return dp.b / 2.0 - dp.b / kPi * sine_integral(x) + dp.b / kPi * sin_minus_xcos(x) / (x * x);
}

double transient(double t, double r, const DerivedParams& dp, const PhysicalParams& p,
                 Mode mode, const QuadratureControl& qc) {
    if (!(r >= p.r0)) throw std::domain_error("transient: r below electrode radius");
    if (t <= 0.0) return p.T_ambient;

    const double base = p.T_ambient - dp.b / (2.0 * r * r);
    if (mode == Mode::SmallElectrodeClosedForm) {
        const double sat = std::sqrt(dp.a * t);
        return base + dp.b / (2.0 * r * sat) * dawson(r / (2.0 * sat));
    }

    // Upper cutoff: Gaussian damping certifies exp(-K^2 a t) <= 1e-16, capped
    // by the 1/k^2 decay of f1 once that bound is tighter.
    const double scale = dp.b / (2.0 * p.r0 * p.r0);
    const double tol = std::max(qc.abs_tol, 1e-12) * scale * r;
    const double k_gauss = std::sqrt(36.9 / (dp.a * t));
    const double k_tail = 2.0 * dp.b / (kPi * p.r0 * p.r0 * std::max(tol, 1e-300));
    const double K = std::max(std::min(k_gauss, k_tail), 4.0 * kPi / r);

    auto f = [&](double k) {
        return std::exp(-k * k * dp.a * t) * f1_exact(k, dp, p) * std::sin(k * r);
    };

    // Per-period segments of sin(k r).
    const double period = kPi / r;
    const long segments = static_cast<long>(std::ceil(K / period));
    QuadratureControl seg_qc;
    seg_qc.abs_tol = tol / static_cast<double>(std::max(segments, 4L));
    seg_qc.rel_tol = 1e-13;
    seg_qc.max_subdivisions = 40;
    double integral = 0.0;
    double err = 0.0;
    for (long j = 0; j < segments; ++j) {
        const double lo = j * period;
        const double hi = std::min(K, (j + 1) * period);
        const IntegralResult seg = integrate(f, lo, hi, seg_qc);
        integral += seg.value;
        err += seg.est_error;
        if (hi >= K) break;
    }
    if (err > 10.0 * tol) {
        throw accuracy_error("parabolic FullQuadrature k-integral did not converge",
                             base + integral / r, err / r);
    }
    return base + integral / r;
}

UndershootResult undershoot_time(double r, const DerivedParams& dp, const PhysicalParams& p) {
    if (!(r > p.r0)) throw std::domain_error("undershoot_time: requires r > r0");
    UndershootResult out;

    auto deficit = [&](double t) {
        return transient(t, r, dp, p, Mode::SmallElectrodeClosedForm) - p.T_ambient;
    };

    // Early times sit above T_inf; expand the horizon geometrically.
    double t_lo = r * r / (36.0 * dp.a); // Dawson argument x = 3
    while (deficit(t_lo) <= 0.0 && t_lo > 1e-12 * r * r / dp.a) t_lo *= 0.5;
    double t_hi = t_lo;
    out.horizon = 1e9 * r * r / dp.a;
    bool bracketed = false;
    for (int i = 0; i < 80 && t_hi < out.horizon; ++i) {
        t_hi *= 2.0;
        if (deficit(t_hi) < 0.0) {
            bracketed = true;
            break;
        }
        t_lo = t_hi;
    }
    if (!bracketed) return out;

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (mid <= t_lo || mid >= t_hi) break;
        if (deficit(mid) < 0.0)
            t_hi = mid;
        else
            t_lo = mid;
        if ((t_hi - t_lo) < 1e-12 * t_hi) break;
    }
    out.found = true;
    out.t_star = 0.5 * (t_lo + t_hi);
    return out;
}

} // namespace infinite_parabolic
} // namespace ablation
