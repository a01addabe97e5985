#include "ablation/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "ablation/errors.hpp"

namespace ablation {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kronrod = kWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    double resabs = kWeights[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        kronrod += kWeights[i] * (f1 + f2);
        resabs += kWeights[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    }
    kronrod *= half;
    gauss *= half;
    resabs *= std::abs(half);

    // QUADPACK-style error estimate, clipped to plain |K-G| scaling.
    double err = std::abs(kronrod - gauss);
    if (resabs > 0.0 && err > 0.0) {
        const double scaled = 200.0 * err / resabs;
        err = resabs * std::min(1.0, std::sqrt(scaled) * scaled);
    }
    return {a, b, kronrod, err};
}

} // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureControl& qc) {
    IntegralResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    heap.push(evaluate_panel(f, a, b));
    double total = heap.top().value;
    double err = heap.top().error;
    int splits = 0;

    auto tolerance = [&](double v) {
        return std::max(qc.abs_tol, qc.rel_tol * std::abs(v));
    };

    while (err > tolerance(total) && splits < qc.max_subdivisions) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at rounding resolution; keep its contribution as is.
            total += 0.0;
            heap.push({worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Recompute the error sum to undo cancellation in the running update.
    double fresh_err = 0.0;
    double fresh_total = 0.0;
    while (!heap.empty()) {
        fresh_err += heap.top().error;
        fresh_total += heap.top().value;
        heap.pop();
    }

    out.value = fresh_total;
    out.est_error = fresh_err;
    out.subdivisions = splits;
    out.converged = fresh_err <= tolerance(fresh_total);
    return out;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadratureControl& qc) {
    const IntegralResult r = integrate(f, a, b, qc);
    if (!r.converged) {
        throw accuracy_error("adaptive quadrature did not converge", r.value, r.est_error);
    }
    return r.value;
}

} // namespace ablation
