#include "ablation/infinite_hyperbolic.hpp"

#include <cmath>

#include "ablation/errors.hpp"
#include "ablation/specfun.hpp"

namespace ablation {
namespace infinite_hyperbolic {

namespace {
// Beyond this the thermal-wave term is bounded by exp(-s) * O(10) and falls
// below any tolerance the assembly works at.
constexpr double kThermalWaveCutoff = 40.0;
} // namespace

DimensionlessPoint dimensionless_point(double t, double r, const DerivedParams& dp,
                                       const PhysicalParams& p) {
    return {t / (2.0 * p.tau), r / (2.0 * std::sqrt(dp.a * p.tau))};
}

double zero_mode_term(double t, double r, const DerivedParams& dp, const PhysicalParams& p) {
    return dp.b / (p.r0 * r) * (t <= 0.0 ? 0.0 : -std::expm1(-t / p.tau));
}

double temperature_spectral(double t, double r, const DerivedParams& dp,
                            const PhysicalParams& p, const QuadratureControl& qc) {
    if (!(r >= p.r0)) throw std::domain_error("temperature: r below electrode radius");
    if (!(t >= 0.0)) throw std::domain_error("temperature_spectral: requires t >= 0");

    const auto [s, u] = dimensionless_point(t, r, dp, p);
    const double root_atau = std::sqrt(dp.a * p.tau);

    const SpecfunValue i1p = i1_kernel(+1, s, u, qc);
    const SpecfunValue i1m = i1_kernel(-1, s, u, qc);
    double bracket = (i1p.value + i1m.value) / (2.0 * root_atau);

    if (s < kThermalWaveCutoff) {
        const SpecfunValue w = s2(s, u, qc);
        const SpecfunValue dw = s2_ds(s, u, qc);
        bracket += std::exp(-s) * (dw.value + w.value) / root_atau;
    }

    return p.T_ambient + zero_mode_term(t, r, dp, p) - dp.b / (2.0 * r * r) +
           dp.b / (4.0 * r) * bracket;
}

double temperature(double t, double r, const DerivedParams& dp, const PhysicalParams& p,
                   const QuadratureControl& qc) {
    if (!(r >= p.r0)) throw std::domain_error("temperature: r below electrode radius");
    if (t <= 0.0) return p.T_ambient;
    return temperature_spectral(t, r, dp, p, qc);
}

std::pair<double, double> coefficient_split(double k, const DerivedParams& dp,
                                            const PhysicalParams& p) {
    if (!(k > 0.0) || !(k < dp.k0)) {
        throw std::domain_error(
            "coefficient_split: only the real branch 0 < k < k0 splits into (f1, g1); "
            "above k0 use the combined thermal-wave form");
    }
    const OmegaRoots w = omega_roots(k, dp, p.tau);
    const double wp = w.omega_plus.real();
    const double wm = w.omega_minus.real();
    const double f1 = dp.b / 2.0 * wm / (wm - wp);
    const double g1 = dp.b / 2.0 * wp / (wp - wm);
    return {f1, g1};
}

double small_tau_kernel(double t, double r, const DerivedParams& dp, double tau) {
    if (!(t > 0.0)) throw std::domain_error("small_tau_kernel: requires t > 0");
    const double sat = std::sqrt(dp.a * t);
    const double x = r / (2.0 * sat);
    const double D = dawson(x);
    // d/dt [D(x)/sqrt(a t)] = -(1/(2 t sqrt(a t))) [D (1 - 2x^2) + x]
    const double g = D / sat;
    const double dg = -(D * (1.0 - 2.0 * x * x) + x) / (2.0 * t * sat);
    return 2.0 * (g - tau * dg);
}

} // namespace infinite_hyperbolic
} // namespace ablation
