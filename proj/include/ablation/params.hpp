#pragma once

#include <complex>
#include <optional>

namespace ablation {

/// User-supplied geometry, material, and source constants (SI units).
struct PhysicalParams {
    double r0 = 1e-3;                ///< electrode radius [m]
    std::optional<double> r1;        ///< outer shell radius [m]; absent = infinite domain
    double kappa = 0.5;              ///< thermal conductivity [W/(m K)]
    double rho = 1000.0;             ///< mass density [kg/m^3]
    double c = 4000.0;               ///< specific heat [J/(kg K)]
    double sigma = 0.5;              ///< electrical conductivity [S/m]
    double V0 = 20.0;                ///< applied potential [V]
    double tau = 1.0;                ///< thermal relaxation time [s]
    double T_ambient = 310.0;        ///< K; plays T_inf (infinite) / T_01 (shell)

    bool finite() const { return r1.has_value(); }
};

/// Every derived constant the closed forms use.
struct DerivedParams {
    double a;          ///< thermal diffusivity kappa/(rho c) [m^2/s]
    double beta;       ///< source constant sigma (V0 r0)^2 / (rho c) [K m^4/s]
    double b;          ///< steady-state constant beta/a [K m^2]
    double eps;        ///< tau/a [s^2/m^2]
    double k0;         ///< critical wavenumber 1/(2 sqrt(a tau)) [1/m]
    double d;          ///< hyperbolic source constant beta/tau [K m^4/s^2]
    double wave_speed; ///< sqrt(a/tau) = 1/sqrt(eps) [m/s]
};

enum class OmegaBranch {
    SubcriticalRealPair,
    CriticalDouble,
    SupercriticalComplexPair,
};

/// The pair of characteristic frequencies of eps*w^2 + w/a + k^2 = 0.
/// Exact identities: w+ + w- = -1/tau, w+ * w- = a k^2 / tau.
struct OmegaRoots {
    double k;
    OmegaBranch branch;
    std::complex<double> omega_plus;
    std::complex<double> omega_minus;
};

/// Validates p and computes the derived record. Throws param_error naming the
/// offending field on non-positive constants or r1 <= r0.
DerivedParams derive_params(const PhysicalParams& p);

/// Total on k >= 0. Branch changes exactly at dp.k0.
OmegaRoots omega_roots(double k, const DerivedParams& dp, double tau);

/// The documented desk-scale default case.
PhysicalParams default_case();

const char* to_string(OmegaBranch b);

} // namespace ablation
