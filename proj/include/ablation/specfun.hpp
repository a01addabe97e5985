#pragma once

#include "ablation/quadrature.hpp"

namespace ablation {

/// Value with an absolute error estimate (quadrature-backed results).
struct SpecfunValue {
    double value = 0.0;
    double est_error = 0.0;
};

/// Dawson integral D+(x) = exp(-x^2) * int_0^x exp(y^2) dy. Odd; abs error
/// well below 1e-12 everywhere.
double dawson(double x);

/// Si(x) = int_0^x sin(t)/t dt. Odd in x.
double sine_integral(double x);

/// Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt. Requires x > 0.
double cosine_integral(double x);

/// Kummer M(1, 3/2, s); used by the bound tests.
double conf_hyp_m_1_32(double s);

/// S1(s,u) = int_0^1 exp(s*sqrt(1-x^2)) sin(u x)/sqrt(1-x^2) dx, evaluated in
/// the y = sqrt(1-x^2) variable where the integrand is smooth.
SpecfunValue s1(double s, double u, const QuadratureControl& qc = {});

/// dS1/ds = int_0^1 exp(s*sqrt(1-x^2)) sin(u x) dx (same smooth-variable form).
SpecfunValue s1_ds(double s, double u, const QuadratureControl& qc = {});

/// I1^sign(s,u) = sign * exp(-s) (d/ds + 1) S1(sign*s, u), s >= 0.
/// Evaluated from the exponentially scaled integrands, so it stays finite for
/// arbitrarily large s.
SpecfunValue i1_kernel(int sign, double s, double u, const QuadratureControl& qc = {});

/// J2^sign(s,u) = int_0^inf cos(u*sqrt(y^2+1) + sign*s*y)/sqrt(y^2+1) dy
/// (equals the Euler-substituted 2*int_0^1 cos((u x^2 +- 2 s x + u)/(1-x^2))/(1-x^2) dx).
/// Conditionally convergent; summed by zero-segmentation + series acceleration.
/// Throws accuracy_error (carrying the best estimate) when the oscillatory
/// tail stops oscillating or fails to accelerate -- in particular on the
/// logarithmically divergent ray u == s of the minus sign.
SpecfunValue j2(int sign, double s, double u, const QuadratureControl& qc = {});

/// dJ2^sign/ds = -sign * int_0^inf y/sqrt(y^2+1) * sin(u*sqrt(y^2+1)+sign*s*y) dy,
/// summed in the Abel sense by the same acceleration machinery.
SpecfunValue j2_ds(int sign, double s, double u, const QuadratureControl& qc = {});

/// S2(s,u) = (J2^- - J2^+)/2.
SpecfunValue s2(double s, double u, const QuadratureControl& qc = {});

/// dS2/ds = (dJ2^-/ds - dJ2^+/ds)/2.
SpecfunValue s2_ds(double s, double u, const QuadratureControl& qc = {});

} // namespace ablation
