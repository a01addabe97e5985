#include "ablation/oscillatory.hpp"

#include <cmath>
#include <limits>

namespace ablation {

void AlternatingAccelerator::push_partial_sum(double s) {
    prev_ = last_;
    double v = s;
    for (double& level : levels_) {
        const double tmp = level;
        level = v;
        v = 0.5 * (tmp + v);
    }
    levels_.push_back(v);
    last_ = v;
}

double AlternatingAccelerator::est_error() const {
    if (levels_.size() < 2) return std::numeric_limits<double>::infinity();
    return std::abs(last_ - prev_);
}

double phase_crossing(const std::function<double(double)>& psi, double y_start,
                      double target, int dir, double initial_step, double y_limit) {
    const double sgn = dir < 0 ? -1.0 : 1.0;
    auto g = [&](double y) { return sgn * (psi(y) - target); };

    double lo = y_start;
    double glo = g(lo);
    if (glo >= 0.0) return lo; // already past the target
    double step = initial_step > 0.0 ? initial_step : 1.0;
    double hi = lo;
    for (int i = 0; i < 200; ++i) {
        hi = lo + step;
        if (hi > y_limit) return std::numeric_limits<double>::quiet_NaN();
        const double ghi = g(hi);
        if (ghi >= 0.0) {
            // Bisect [lo, hi].
            double a = lo, b = hi;
            for (int it = 0; it < 120; ++it) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                if (g(m) < 0.0)
                    a = m;
                else
                    b = m;
            }
            return 0.5 * (a + b);
        }
        lo = hi;
        step *= 1.6;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

OscillatoryTail sum_oscillatory_segments(const std::function<double(double)>& f,
                                         double start,
                                         const std::function<double()>& next_breakpoint,
                                         const QuadratureControl& segment_qc,
                                         double tol, int max_segments) {
    OscillatoryTail out;
    AlternatingAccelerator accel;
    double partial = 0.0;
    double quad_err = 0.0;
    double y = start;
    out.last_breakpoint = start;

    for (int j = 0; j < max_segments; ++j) {
        const double y_next = next_breakpoint();
        if (!std::isfinite(y_next) || y_next <= y) {
            out.exhausted = true;
            break;
        }
        const IntegralResult seg = integrate(f, y, y_next, segment_qc);
        partial += seg.value;
        quad_err += seg.est_error;
        accel.push_partial_sum(partial);
        y = y_next;
        out.last_breakpoint = y;
        out.segments = j + 1;
        if (accel.terms() >= 5 && accel.est_error() + quad_err <= tol) {
            out.value = accel.estimate();
            out.est_error = accel.est_error() + quad_err;
            out.converged = true;
            return out;
        }
    }

    out.value = accel.terms() > 0 ? accel.estimate() : 0.0;
    out.est_error = (accel.terms() > 1 ? accel.est_error() : std::abs(out.value)) + quad_err;
    return out;
}

} // namespace ablation
