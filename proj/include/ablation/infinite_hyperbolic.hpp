#pragma once

#include <utility>

#include "ablation/params.hpp"
#include "ablation/quadrature.hpp"

namespace ablation {
namespace infinite_hyperbolic {

/// s = t/(2 tau), u = r/(2 sqrt(a tau)).
struct DimensionlessPoint {
    double s;
    double u;
};

DimensionlessPoint dimensionless_point(double t, double r, const DerivedParams& dp,
                                       const PhysicalParams& p);

/// The k = 0 relaxation term (b/(r0 r)) (1 - exp(-t/tau)).
double zero_mode_term(double t, double r, const DerivedParams& dp, const PhysicalParams& p);

/// Full transient of the relaxing (Cattaneo-Vernotte) model on r >= r0:
///   T_inf + zero_mode - b/(2 r^2)
///   + (b/(4r)) [ (I1+ + I1-)/(2 sqrt(a tau)) + (exp(-s)/sqrt(a tau)) (d/ds + 1) S2(s,u) ].
/// Always assembles the quadratures (valid for t >= 0); quadrature failures
/// propagate as accuracy_error with best-estimate payloads.
double temperature_spectral(double t, double r, const DerivedParams& dp,
                            const PhysicalParams& p, const QuadratureControl& qc = {});

/// Public evaluation: t <= 0 short-circuits to exactly T_inf (initial
/// condition branch), otherwise temperature_spectral.
double temperature(double t, double r, const DerivedParams& dp, const PhysicalParams& p,
                   const QuadratureControl& qc = {});

/// Small-electrode spectral coefficients (f1, g1) for 0 < k < k0:
/// f1 = (b/2) w-/(w- - w+), g1 = (b/2) w+/(w+ - w-).
/// Throws domain_error at or above the critical wavenumber.
std::pair<double, double> coefficient_split(double k, const DerivedParams& dp,
                                            const PhysicalParams& p);

/// The tau-expanded kernel 2 (1 - tau d/dt) [ D+(r/(2 sqrt(a t))) / sqrt(a t) ],
/// the time derivative applied analytically. Approximates the k-space I1 for
/// small tau.
double small_tau_kernel(double t, double r, const DerivedParams& dp, double tau);

} // namespace infinite_hyperbolic
} // namespace ablation
