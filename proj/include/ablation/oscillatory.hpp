#pragma once

#include <functional>
#include <vector>

#include "ablation/quadrature.hpp"

namespace ablation {

/// Streaming van Wijngaarden averaging of a sequence of partial sums.
/// Converges to the Abel/Cesaro value for bounded alternating sequences,
/// which is exactly what the conditionally convergent oscillatory tails need.
class AlternatingAccelerator {
public:
    void push_partial_sum(double s);
    double estimate() const { return last_; }
    double est_error() const;
    int terms() const { return static_cast<int>(levels_.size()); }

private:
    std::vector<double> levels_;
    double last_ = 0.0;
    double prev_ = 0.0;
};

/// Locates y > y_start with psi(y) == target for a phase that is strictly
/// monotone (direction dir = +-1) past y_start. Returns NaN when the target
/// is not reached before y_limit (e.g. a phase that saturates).
double phase_crossing(const std::function<double(double)>& psi, double y_start,
                      double target, int dir, double initial_step, double y_limit);

struct OscillatoryTail {
    double value = 0.0;
    double est_error = 0.0;
    bool converged = false;
    int segments = 0;
    /// Set when the breakpoint generator ran dry before convergence; the
    /// summed prefix is still reported in value.
    bool exhausted = false;
    double last_breakpoint = 0.0;
};

/// Sums integral(f) over [start, b0], [b0, b1], ... where the breakpoints come
/// from next_breakpoint() (NaN = no further breakpoint), accelerating the
/// alternating series of segment integrals.
OscillatoryTail sum_oscillatory_segments(const std::function<double(double)>& f,
                                         double start,
                                         const std::function<double()>& next_breakpoint,
                                         const QuadratureControl& segment_qc,
                                         double tol, int max_segments);

} // namespace ablation
