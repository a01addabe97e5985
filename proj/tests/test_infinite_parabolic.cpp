#include <cmath>
#include <numbers>

#include <doctest.h>

#include "ablation/errors.hpp"
#include "ablation/fd_oracle.hpp"
#include "ablation/infinite_parabolic.hpp"
#include "ablation/oscillatory.hpp"
#include "ablation/params.hpp"
#include "ablation/quadrature.hpp"

using namespace ablation;
namespace ip = infinite_parabolic;

namespace {

constexpr double kPi = std::numbers::pi;

// f1 from the two defining integrals, the infinite one summed at the sine
// zeros -- a route that never touches the Si implementation.
double f1_oracle(double k, const DerivedParams& dp, const PhysicalParams& p) {
    auto tail_f = [k](double r) { return std::sin(k * r) / r; };
    double target = (std::floor(k * p.r0 / kPi) + 1.0) * kPi / k;
    auto next = [&]() {
        const double r = target;
        target += kPi / k;
        return r;
    };
    const auto tail = sum_oscillatory_segments(tail_f, p.r0, next, {1e-14, 1e-14, 50}, 1e-12, 90);
    REQUIRE(tail.converged);
    const double inner =
        integrate([k](double r) { return r * std::sin(k * r); }, 0.0, p.r0, {1e-15, 1e-14, 200})
            .value;
    return dp.b / kPi * tail.value + dp.b / (kPi * p.r0 * p.r0) * inner;
}

} // namespace

TEST_CASE("steady state: electrode value, far field, no-flux condition") {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);

    CHECK(ip::steady_state(p.r0, dp, p) ==
          doctest::Approx(p.T_ambient + dp.b / (2.0 * p.r0 * p.r0)).epsilon(1e-14));
    CHECK(ip::steady_state(1e6 * p.r0, dp, p) == doctest::Approx(p.T_ambient).epsilon(1e-5));

    const double h = 1e-6 * p.r0;
    const double fd =
        (ip::steady_state(p.r0 + h, dp, p) - ip::steady_state(p.r0, dp, p)) / h;
    CHECK(std::abs(fd) < 1e-5 * dp.b / (p.r0 * p.r0 * p.r0));

    CHECK_THROWS_AS(ip::steady_state(0.5 * p.r0, dp, p), std::domain_error);
}

TEST_CASE("f1_exact: small-k limit and quadrature oracle") {
    PhysicalParams p = default_case();
    p.r0 = 1.0;
    p.r1.reset();
    p.sigma = 2.0;
    p.V0 = 1.0;
    p.kappa = 1.0;
    p.rho = 1.0;
    p.c = 1.0; // b = 2
    const DerivedParams dp = derive_params(p);
    REQUIRE(dp.b == doctest::Approx(2.0));

    CHECK(std::abs(ip::f1_exact(1e-6 / p.r0, dp, p) - dp.b / 2.0) < 1e-6 * dp.b);

    for (double x : {kPi, 10.0}) {
        const double k = x / p.r0;
        CHECK(std::abs(ip::f1_exact(k, dp, p) - f1_oracle(k, dp, p)) < 1e-8 * dp.b);
    }
    CHECK_THROWS_AS(ip::f1_exact(0.0, dp, p), std::domain_error);
}

TEST_CASE("transient: initial branch, early limit, monotone growth") {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    const double r = 2.0 * p.r0;

    CHECK(ip::transient(0.0, r, dp, p, ip::Mode::SmallElectrodeClosedForm) == p.T_ambient);
    CHECK(ip::transient(-3.0, r, dp, p, ip::Mode::FullQuadrature) == p.T_ambient);

    const double t0 = 1e-4 * p.r0 * p.r0 / dp.a;
    CHECK(std::abs(ip::transient(t0, r, dp, p, ip::Mode::SmallElectrodeClosedForm) -
                   p.T_ambient) < 1e-3 * dp.b / (p.r0 * p.r0));

    // early growth: dT/dt > 0 while the Dawson argument is still large
    const double t1 = 0.02 * r * r / dp.a;
    const double h = 1e-3 * t1;
    const double slope = (ip::transient(t1 + h, r, dp, p, ip::Mode::SmallElectrodeClosedForm) -
                          ip::transient(t1 - h, r, dp, p, ip::Mode::SmallElectrodeClosedForm)) /
                         (2.0 * h);
    CHECK(slope > 0.0);
}

TEST_CASE("the two transient modes agree to O(r0), improving as r0 shrinks") {
    PhysicalParams p = default_case();
    const double r = 4e-3;
    const double t = 20.0;

    auto rel_gap = [&](double r0) {
        p.r0 = r0;
        const DerivedParams dp = derive_params(p);
        const double full = ip::transient(t, r, dp, p, ip::Mode::FullQuadrature);
        const double closed = ip::transient(t, r, dp, p, ip::Mode::SmallElectrodeClosedForm);
        return std::abs(full - closed) / dp.b;
    };

    const double gap1 = rel_gap(1e-3);
    const double gap2 = rel_gap(1e-4);
    CHECK(gap2 < gap1 / 5.0);
}

TEST_CASE("large-time limit exhibits the wrong steady state") {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    const double r = 3.0 * p.r0;
    const double t = 1e7 * r * r / dp.a;
    const double late = ip::transient(t, r, dp, p, ip::Mode::SmallElectrodeClosedForm);
    const double wrong_limit = p.T_ambient - dp.b / (2.0 * r * r);
    CHECK(std::abs(late - wrong_limit) < 1e-4 * dp.b / (r * r));
    // the defect against the true steady state is exactly the b/(r0 r) term
    const double defect = ip::steady_state(r, dp, p) - wrong_limit;
    CHECK(defect == doctest::Approx(dp.b / (p.r0 * r)).epsilon(1e-12));
}

TEST_CASE("undershoot time: existence, root quality, diffusive scaling") {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    const double r = 2.0 * p.r0;

    const auto us = ip::undershoot_time(r, dp, p);
    REQUIRE(us.found);
    CHECK(us.t_star > 0.0);

    const double at_root = ip::transient(us.t_star, r, dp, p, ip::Mode::SmallElectrodeClosedForm);
    CHECK(std::abs(at_root - p.T_ambient) < 1e-9 * dp.b / (p.r0 * p.r0));
    CHECK(ip::transient(4.0 * us.t_star, r, dp, p, ip::Mode::SmallElectrodeClosedForm) <
          p.T_ambient);

    const auto us2 = ip::undershoot_time(2.0 * r, dp, p);
    REQUIRE(us2.found);
    CHECK(std::abs(us2.t_star / us.t_star / 4.0 - 1.0) < 0.5);
}

TEST_CASE("full quadrature matches the origin-continuation FD solve") {
    PhysicalParams p = default_case();
    p.r1 = 40e-3; // truncation radius >= 20 sqrt(a t_max)
    const DerivedParams dp = derive_params(p);
    const double t_max = 20.0;
    REQUIRE(*p.r1 >= 20.0 * std::sqrt(dp.a * t_max));

    namespace fd = fd_oracle;
    const fd::Grid g = fd::make_grid(p, dp, fd::Scheme::ExplicitParabolic, 2001, t_max, 0.9, 40,
                                     fd::InnerBoundary::OriginCauchy);
    const TemperatureProfile prof = fd::solve_parabolic(p, dp, g);

    const double tol = 1e-3 * dp.b / (2.0 * p.r0 * p.r0);
    double worst = 0.0;
    for (double t : {5.0, 20.0}) {
        std::size_t it = 0;
        for (std::size_t i = 0; i < prof.nt(); ++i) {
            if (std::abs(prof.times[i] - t) < std::abs(prof.times[it] - t)) it = i;
        }
        REQUIRE(std::abs(prof.times[it] - t) < 1e-9);
        for (double r : {1.5e-3, 2e-3, 3e-3, 5e-3}) {
            const std::size_t ir = static_cast<std::size_t>(std::llround(r / g.dr));
            REQUIRE(std::abs(prof.radii[ir] - r) < 1e-12);
            const double exact = ip::transient(t, r, dp, p, ip::Mode::FullQuadrature);
            worst = std::max(worst, std::abs(exact - prof.at(it, ir)));
        }
    }
    CHECK(worst < tol);
}
