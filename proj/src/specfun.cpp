#include "ablation/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "ablation/errors.hpp"
#include "ablation/oscillatory.hpp"

namespace ablation {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.577215664901532860606512;

double sinc(double z) {
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
    }
    return std::sin(z) / z;
}

} // namespace

double dawson(double x) {
    // Rybicki's sampling method; h = 0.25 puts the discretization error near
    // exp(-(pi/2h)^2) ~ 7e-18, far below the 1e-12 contract.
    constexpr double H = 0.25;
    constexpr int NMAX = 16;
    static const std::array<double, NMAX> coeff = [] {
        std::array<double, NMAX> c{};
        for (int i = 0; i < NMAX; ++i) {
            const double m = (2.0 * i + 1.0) * H;
            c[i] = std::exp(-m * m);
        }
        return c;
    }();

    const double ax = std::abs(x);
    if (ax < 0.2) {
        // Maclaurin series: x * sum (-2x^2)^n / (2n+1)!!
        const double w = -2.0 * x * x;
        double term = x;
        double sum = x;
        for (int n = 0; n < 30; ++n) {
            term *= w / (2.0 * n + 3.0);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }

    const int n0 = 2 * static_cast<int>(0.5 * ax / H + 0.5);
    const double xp = ax - n0 * H;
    double e1 = std::exp(2.0 * xp * H);
    const double e2 = e1 * e1;
    double d1 = n0 + 1.0;
    double d2 = d1 - 2.0;
    double sum = 0.0;
    for (int i = 0; i < NMAX; ++i) {
        sum += coeff[i] * (e1 / d1 + 1.0 / (d2 * e1));
        d1 += 2.0;
        d2 -= 2.0;
        e1 *= e2;
    }
    const double val = std::exp(-xp * xp) * sum / std::sqrt(kPi);
    return std::copysign(val, x);
}

namespace {

// Si and Ci for x > 0: power series below 2, complex continued fraction for
// the exponential integral above (Lentz's method).
void cisi(double x, double& si, double& ci) {
    constexpr double EPS = 1e-16;
    constexpr int MAXIT = 300;
    if (x < 2.0) {
        // Si = sum (-1)^k x^(2k+1)/((2k+1)(2k+1)!)
        double term = x; // x^(2k+1)/(2k+1)!
        double sum_si = 0.0;
        double sign = 1.0;
        for (int k = 0; k < 60; ++k) {
            const double add = sign * term / (2.0 * k + 1.0);
            sum_si += add;
            term *= x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            sign = -sign;
            if (std::abs(add) < EPS * std::abs(sum_si) + 1e-300) break;
        }
        // Ci = gamma + ln x + sum_{m>=1} (-1)^m x^(2m)/((2m)(2m)!)
        double t = 1.0; // x^(2m)/(2m)!
        double sum_ci = 0.0;
        double sg = 1.0;
        for (int m = 1; m <= 60; ++m) {
            t *= x * x / ((2.0 * m - 1.0) * (2.0 * m));
            sg = -sg;
            const double add = sg * t / (2.0 * m);
            sum_ci += add;
            if (std::abs(add) < EPS * std::abs(sum_ci) + 1e-300) break;
        }
        si = sum_si;
        ci = kEulerGamma + std::log(x) + sum_ci;
        return;
    }

    std::complex<double> b(1.0, x);
    std::complex<double> c(1.0 / 1e-300, 0.0);
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 2; i <= MAXIT; ++i) {
        const double a = -(i - 1.0) * (i - 1.0);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < EPS) break;
    }
    h *= std::complex<double>(std::cos(x), -std::sin(x));
    ci = -h.real();
    si = kPi / 2.0 + h.imag();
}

} // namespace

double sine_integral(double x) {
    if (x == 0.0) return 0.0;
    double si, ci;
    cisi(std::abs(x), si, ci);
    return std::copysign(si, x);
}

double cosine_integral(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("cosine_integral: requires x > 0 (diverges at 0)");
    }
    double si, ci;
    cisi(x, si, ci);
    return ci;
}

double conf_hyp_m_1_32(double s) {
    if (std::abs(s) < 0.5) {
        // sum (2s)^n / (2n+1)!!
        double term = 1.0, sum = 1.0;
        for (int n = 0; n < 40; ++n) {
            term *= 2.0 * s / (2.0 * n + 3.0);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    if (s > 0.0) {
        const double rs = std::sqrt(s);
        return 0.5 * std::sqrt(kPi) * std::exp(s) * std::erf(rs) / rs;
    }
    const double rs = std::sqrt(-s);
    return dawson(rs) / rs;
}

namespace {

SpecfunValue finish(const IntegralResult& r, const char* what) {
    if (!r.converged) throw accuracy_error(what, r.value, r.est_error);
    return {r.value, r.est_error};
}

} // namespace

SpecfunValue s1(double s, double u, const QuadratureControl& qc) {
    auto f = [s, u](double y) {
        const double g = std::sqrt(std::max(0.0, 1.0 - y * y));
        return std::exp(s * y) * u * sinc(u * g);
    };
    return finish(integrate(f, 0.0, 1.0, qc), "s1 quadrature did not converge");
}

SpecfunValue s1_ds(double s, double u, const QuadratureControl& qc) {
    auto f = [s, u](double y) {
        const double g = std::sqrt(std::max(0.0, 1.0 - y * y));
        return y * std::exp(s * y) * u * sinc(u * g);
    };
    return finish(integrate(f, 0.0, 1.0, qc), "s1_ds quadrature did not converge");
}

SpecfunValue i1_kernel(int sign, double s, double u, const QuadratureControl& qc) {
    if (sign != 1 && sign != -1) throw std::domain_error("i1_kernel: sign must be +-1");
    if (!(s >= 0.0)) throw std::domain_error("i1_kernel: requires s >= 0");
    // exp(-s) * [dS1/ds(sign*s, u) + sign*S1(sign*s, u)], with exp(-s) folded
    // into the integrand: exp(-s(1 -+ y)) stays bounded for any s.
    const double sg = static_cast<double>(sign);

    if (s >= 50.0) {
        // The mass sits in a layer of width 1/s that an adaptive rule on
        // [0, 1] can no longer see; substitute so the layer is resolved for
        // any s. The tail beyond xi = 45 carries exp(-45) of the weight.
        const double xi_max = std::min(s, 45.0);
        if (sign > 0) {
            // layer at y = 1: xi = s (1 - y)
            auto f = [s, u](double xi) {
                const double y = 1.0 - xi / s;
                const double g = std::sqrt(std::max(0.0, 1.0 - y * y));
                return std::exp(-xi) * (y + 1.0) * u * sinc(u * g) / s;
            };
            return finish(integrate(f, 0.0, xi_max, qc),
                          "i1_kernel quadrature did not converge");
        }
        // layer at y = 0: xi = s y, the remaining exp(-s) factors out
        const double damp = std::exp(-s);
        auto f = [s, u, damp](double xi) {
            const double y = xi / s;
            const double g = std::sqrt(std::max(0.0, 1.0 - y * y));
            return damp * std::exp(-xi) * (y - 1.0) * u * sinc(u * g) / s;
        };
        return finish(integrate(f, 0.0, xi_max, qc),
                      "i1_kernel quadrature did not converge");
    }

    auto f = [s, u, sg](double y) {
        const double g = std::sqrt(std::max(0.0, 1.0 - y * y));
        const double ex = std::exp(-s * (1.0 - sg * y));
        return ex * (y + sg) * u * sinc(u * g);
    };
    return finish(integrate(f, 0.0, 1.0, qc), "i1_kernel quadrature did not converge");
}

namespace {

// Shared engine for J2 and dJ2/ds: integrates amp(y) * trig(psi(y)) over
// [0, inf) with psi = u*sqrt(y^2+1) + sign*s*y, splitting the tail at the
// trig zeros and accelerating the alternating segment series.
SpecfunValue j2_engine(bool derivative, int sign, double s, double u,
                       const QuadratureControl& qc) {
    if (sign != 1 && sign != -1) throw std::domain_error("j2: sign must be +-1");
    if (!(s >= 0.0)) throw std::domain_error("j2: requires s >= 0");
    if (!(u > 0.0)) throw std::domain_error("j2: requires u > 0");

    const double sg = static_cast<double>(sign);
    auto psi = [u, s, sg](double y) { return u * std::hypot(y, 1.0) + sg * s * y; };
    auto psid = [u, s, sg](double y) { return u * y / std::hypot(y, 1.0) + sg * s; };
    auto f = [&, derivative](double y) {
        const double h = std::hypot(y, 1.0);
        return derivative ? (y / h) * std::sin(psi(y)) : std::cos(psi(y)) / h;
    };

    // Start the zero-walk past any stationary point of the phase.
    double y_start = 1.0;
    if (sign < 0 && u > s) {
        const double ys = s / std::sqrt((u - s) * (u + s));
        y_start = 1.5 * ys + 1.0;
    }

    QuadratureControl head_qc = qc;
    head_qc.abs_tol = std::max(qc.abs_tol * 0.5, 1e-14);
    const IntegralResult head = integrate(f, 0.0, y_start, head_qc);

    const int dir = psid(y_start) >= 0.0 ? 1 : -1;
    const double psi0 = psi(y_start);
    // First trig zero strictly past psi0 in the walk direction.
    double target;
    if (derivative) { // zeros of sin at m*pi
        target = dir > 0 ? (std::floor(psi0 / kPi) + 1.0) * kPi
                         : (std::ceil(psi0 / kPi) - 1.0) * kPi;
    } else { // zeros of cos at (m + 1/2)*pi
        target = dir > 0 ? (std::floor(psi0 / kPi - 0.5) + 1.5) * kPi
                         : (std::ceil(psi0 / kPi - 0.5) - 0.5) * kPi;
    }
    // psi(y_start) can sit on a zero to rounding; step past it so the first
    // crossing search cannot return y_start itself.
    if (std::abs(target - psi0) < 1e-9 * (1.0 + std::abs(psi0))) target += dir * kPi;

    const double y_limit = y_start + 1e7;
    double y_cur = y_start;
    auto next_zero = [&]() -> double {
        const double slope = std::abs(psid(y_cur));
        const double step = std::clamp(kPi / std::max(slope, 1e-12), 1e-9, 1e6);
        const double yn = phase_crossing(psi, y_cur, target, dir, step, y_limit);
        if (!std::isfinite(yn)) return std::numeric_limits<double>::quiet_NaN();
        y_cur = yn;
        target += dir > 0 ? kPi : -kPi;
        return yn;
    };

    QuadratureControl seg_qc;
    seg_qc.abs_tol = std::max(qc.abs_tol * 0.02, 1e-15);
    seg_qc.rel_tol = 1e-13;
    seg_qc.max_subdivisions = 60;
    const double tol = std::max(qc.abs_tol, qc.rel_tol * std::abs(head.value));
    const int max_segments = std::min(qc.max_subdivisions, 160);

    const OscillatoryTail tail =
        sum_oscillatory_segments(f, y_start, next_zero, seg_qc, tol, max_segments);

    double value = head.value + tail.value;
    double err = head.est_error + tail.est_error;
    if (tail.converged) return {value, err};

    if (tail.exhausted) {
        // The phase stopped producing zeros (saturating phase, e.g. the u==s
        // ray of the minus sign). Probe the leftover tail by octave blocks;
        // a convergent remainder must decay block over block.
        double y = std::max(tail.last_breakpoint, y_start);
        double prev = std::numeric_limits<double>::infinity();
        int stall = 0;
        for (int k = 0; k < 48; ++k) {
            const IntegralResult blk = integrate(f, y, 2.0 * y, seg_qc);
            value += blk.value;
            err += blk.est_error;
            if (std::abs(blk.value) <= tol) return {value, err + std::abs(blk.value)};
            stall = std::abs(blk.value) > 0.5 * prev ? stall + 1 : 0;
            if (stall >= 3) break;
            prev = std::abs(blk.value);
            y *= 2.0;
        }
        throw accuracy_error("j2: oscillatory tail stopped oscillating and does not converge "
                             "(the integral diverges on the u == s ray of the minus sign)",
                             value, err + std::abs(prev));
    }

    throw accuracy_error("j2: oscillatory tail failed to accelerate within the segment budget",
                         value, err);
}

} // namespace

SpecfunValue j2(int sign, double s, double u, const QuadratureControl& qc) {
    return j2_engine(false, sign, s, u, qc);
}

SpecfunValue j2_ds(int sign, double s, double u, const QuadratureControl& qc) {
    SpecfunValue core = j2_engine(true, sign, s, u, qc);
    core.value *= -static_cast<double>(sign);
    return core;
}

SpecfunValue s2(double s, double u, const QuadratureControl& qc) {
    const SpecfunValue m = j2(-1, s, u, qc);
    const SpecfunValue p = j2(+1, s, u, qc);
    return {0.5 * (m.value - p.value), 0.5 * (m.est_error + p.est_error)};
}

SpecfunValue s2_ds(double s, double u, const QuadratureControl& qc) {
    const SpecfunValue m = j2_ds(-1, s, u, qc);
    const SpecfunValue p = j2_ds(+1, s, u, qc);
    return {0.5 * (m.value - p.value), 0.5 * (m.est_error + p.est_error)};
}

} // namespace ablation
