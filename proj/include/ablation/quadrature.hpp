#pragma once

#include <functional>

namespace ablation {

/// Accuracy request for the adaptive integrators.
struct QuadratureControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

struct IntegralResult {
    double value = 0.0;
    double est_error = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod 15(7) on [a, b]. Splits the interval with the
/// largest error estimate first; stops when est_error <= max(abs_tol,
/// rel_tol*|value|) or the subdivision budget is spent.
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureControl& qc = {});

/// Like integrate() but throws accuracy_error (carrying the best estimate)
/// instead of returning an unconverged result.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadratureControl& qc = {});

} // namespace ablation
