#pragma once

#include "ablation/params.hpp"
#include "ablation/quadrature.hpp"

namespace ablation {
namespace infinite_parabolic {

enum class Mode { SmallElectrodeClosedForm, FullQuadrature };

/// Steady state T_inf + b/(r0 r) - b/(2 r^2) on r >= r0.
double steady_state(double r, const DerivedParams& dp, const PhysicalParams& p);

/// Exact sine-transform coefficient of the initial deficit (k > 0):
/// b/2 - (b/pi) Si(k r0) + b (sin k r0 - k r0 cos k r0) / (pi k^2 r0^2).
double f1_exact(double k, const DerivedParams& dp, const PhysicalParams& p);

/// Transient solution. t <= 0 returns exactly T_inf.
/// SmallElectrodeClosedForm: T_inf - b/(2r^2) + (b/(2 r sqrt(a t))) D+(r/(2 sqrt(a t))).
/// FullQuadrature: T_inf - b/(2r^2) + (1/r) int_0^K exp(-k^2 a t) f1_exact(k) sin(k r) dk,
/// the delta-distribution part of the cosine coefficient cancelled analytically.
double transient(double t, double r, const DerivedParams& dp, const PhysicalParams& p,
                 Mode mode, const QuadratureControl& qc = {});

struct UndershootResult {
    bool found = false;
    double t_star = 0.0;
    double horizon = 0.0;
};

/// Smallest t with T(t, r) < T_inf (the large-time pathology of the closed
/// form). Bisection refined far below 1e-6 relative.
UndershootResult undershoot_time(double r, const DerivedParams& dp, const PhysicalParams& p);

} // namespace infinite_parabolic
} // namespace ablation
