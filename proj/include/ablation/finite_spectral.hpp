#pragma once

#include <complex>
#include <vector>

#include "ablation/params.hpp"
#include "ablation/quadrature.hpp"

namespace ablation {
namespace finite_spectral {

enum class Model { Parabolic, Hyperbolic };

/// One eigenmode of -y'' = k^2 y, y(r1)=0, r0 y'(r0) - y(r0) = 0 on [r0, r1].
struct EigenMode {
    int n = 0;
    double k_n = 0.0;
    /// Reduced phase: k_n (r1-r0) = (2n+1) pi/2 + delta, delta in (0, pi/2).
    /// Kept exactly so trig of the large phase never loses digits.
    double delta = 0.0;
    double norm = 0.0; ///< L2 normalization, norm^2 = int sin^2(k_n (r1-r))dr
    double c_n = 0.0;  ///< total Fourier coefficient a_n + b_n
    std::complex<double> a_n{0.0, 0.0};
    std::complex<double> b_n{0.0, 0.0};
    OmegaBranch branch = OmegaBranch::SubcriticalRealPair;
};

struct SeriesControl {
    int n_max = 400;
    QuadratureControl coeff_quadrature{1e-12, 1e-12, 4000};
};

/// First n_max eigen-wavenumbers, one per bracket, ascending.
std::vector<double> eigenvalues(const PhysicalParams& p, int n_max);

/// Modes with k_n, delta and the closed-form norm filled.
std::vector<EigenMode> eigen_modes(const PhysicalParams& p, int n_max);

/// Safeguarded residual |tan(k L) + k r0|/(1 + k r0), evaluated through the
/// reduced phase so it is meaningful at any n.
double eigen_residual(const EigenMode& m, const PhysicalParams& p);

/// Orthonormal mode shape sin(k_n (r1 - r))/norm; r must lie in [r0, r1].
double eigenfunction(const EigenMode& m, double r, const PhysicalParams& p);

/// The t=0 deficit r (T01 - T1(r)) that the series must reproduce:
/// b/(2r) - b/r0 + r (b/(r0 r1) - b/(2 r1^2)).
double expansion_target(double r, const PhysicalParams& p, const DerivedParams& dp);

/// Fills c_n = <target, phi_n> by adaptive quadrature (parallel across modes).
void fourier_coefficients(std::vector<EigenMode>& modes, const PhysicalParams& p,
                          const DerivedParams& dp, const SeriesControl& sc);

/// Splits c_n into the (a_n, b_n) pair of the omega+- families:
/// parabolic a_n = c_n; hyperbolic a_n = c_n w-/(w- - w+), b_n = c_n - a_n
/// (complex conjugates above k0), enforcing zero initial slope mode-wise.
void coefficient_split_finite(std::vector<EigenMode>& modes, const DerivedParams& dp,
                              double tau, Model model);

/// Time factor F_n(t) with F_n(0)=1 (and dF/dt(0)=0 for the hyperbolic model):
/// parabolic exp(-a k^2 t); hyperbolic e^{-t/2tau}[cosh(dt)+t/(2tau) sinhc(dt)]
/// below k0 and the damped oscillation above it.
double mode_time_factor(double k, double t, const DerivedParams& dp, double tau, Model model);

/// Steady state of the shell problem (Dirichlet T01 at r1, no flux at r0).
double steady_state_finite(double r, const PhysicalParams& p, const DerivedParams& dp);

struct SeriesValue {
    double T = 0.0;
    double trunc_estimate = 0.0; ///< |c_last| |phi|_inf / r
};

/// Truncated series solution steady + (1/r) sum c_n F_n(t) phi_n(r).
SeriesValue series_temperature(double t, double r, const std::vector<EigenMode>& modes,
                               const PhysicalParams& p, const DerivedParams& dp, Model model);

struct DecayRate {
    double rate = 0.0; ///< [1/s], negative
    bool first_mode_supercritical = false;
};

/// Slowest approach to steady state: -a k_0^2 from the lowest eigenvalue
/// (same for both models while mode 0 is subcritical); -1/(2 tau) with a flag
/// when the lowest hyperbolic mode is already oscillatory.
DecayRate slowest_decay_rate(const std::vector<EigenMode>& modes, const DerivedParams& dp,
                             double tau, Model model);

} // namespace finite_spectral
} // namespace ablation
