#include "ablation/params.hpp"

#include <cmath>

#include "ablation/errors.hpp"

namespace ablation {

DerivedParams derive_params(const PhysicalParams& p) {
    auto require_positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw param_error(name, "must be a positive finite number");
        }
    };
    require_positive(p.r0, "r0");
    require_positive(p.kappa, "kappa");
    require_positive(p.rho, "rho");
    require_positive(p.c, "c");
    require_positive(p.sigma, "sigma");
    require_positive(p.tau, "tau");
    if (!std::isfinite(p.V0)) throw param_error("V0", "must be finite");
    if (!std::isfinite(p.T_ambient)) throw param_error("T_ambient", "must be finite");
    if (p.r1 && !(*p.r1 > p.r0)) {
        throw param_error("r1", "outer radius must exceed r0");
    }

    DerivedParams dp{};
    dp.a = p.kappa / (p.rho * p.c);
    dp.beta = p.sigma * (p.V0 * p.r0) * (p.V0 * p.r0) / (p.rho * p.c);
    dp.b = dp.beta / dp.a;
    dp.eps = p.tau / dp.a;
    dp.k0 = 1.0 / (2.0 * std::sqrt(dp.a * p.tau));
    dp.d = dp.beta / p.tau;
    dp.wave_speed = std::sqrt(dp.a / p.tau);
    return dp;
}

OmegaRoots omega_roots(double k, const DerivedParams& dp, double tau) {
    OmegaRoots out;
    out.k = k;
    if (k == 0.0) {
        out.branch = OmegaBranch::SubcriticalRealPair;
        out.omega_plus = 0.0;
        out.omega_minus = -1.0 / tau;
        return out;
    }
    // Discriminant of w^2 + w/tau + a k^2/tau, written so its sign agrees
    // exactly with comparing k against dp.k0.
    const double disc = (dp.a / tau) * (dp.k0 - k) * (dp.k0 + k);
    const double mu = -1.0 / (2.0 * tau);
    if (k < dp.k0) {
        const double root = std::sqrt(disc);
        const double wm = mu - root; // larger magnitude, no cancellation
        const double wp = (dp.a * k * k / tau) / wm;
        out.branch = OmegaBranch::SubcriticalRealPair;
        out.omega_plus = wp;
        out.omega_minus = wm;
    } else if (k > dp.k0) {
        const double nu = std::sqrt(-disc);
        out.branch = OmegaBranch::SupercriticalComplexPair;
        out.omega_plus = {mu, nu};
        out.omega_minus = {mu, -nu};
    } else {
        out.branch = OmegaBranch::CriticalDouble;
        out.omega_plus = mu;
        out.omega_minus = mu;
    }
    return out;
}

PhysicalParams default_case() {
    PhysicalParams p;
    p.r0 = 1e-3;
    p.r1 = 50e-3;
    p.kappa = 0.5;
    p.rho = 1000.0;
    p.c = 4000.0;
    p.sigma = 0.5;
    p.V0 = 20.0;
    p.tau = 1.0;
    p.T_ambient = 310.0;
    return p;
}

const char* to_string(OmegaBranch b) {
    switch (b) {
        case OmegaBranch::SubcriticalRealPair: return "SubcriticalRealPair";
        case OmegaBranch::CriticalDouble: return "CriticalDouble";
        case OmegaBranch::SupercriticalComplexPair: return "SupercriticalComplexPair";
    }
    return "?";
}

} // namespace ablation
