#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "ablation/errors.hpp"
#include "ablation/params.hpp"

using namespace ablation;

TEST_CASE("derived constants from definitions") {
    PhysicalParams p = default_case();
    p.kappa = 2.0;
    p.rho = 1000.0;
    p.c = 2.0;
    const DerivedParams dp = derive_params(p);
    CHECK(dp.a == doctest::Approx(0.001).epsilon(1e-15));
}

TEST_CASE("all-ones case") {
    PhysicalParams p;
    p.r0 = 1.0;
    p.r1.reset();
    p.kappa = 1.0;
    p.rho = 1.0;
    p.c = 1.0;
    p.sigma = 1.0;
    p.V0 = 1.0;
    p.tau = 1.0;
    p.T_ambient = 0.0;
    const DerivedParams dp = derive_params(p);
    CHECK(dp.beta == doctest::Approx(1.0));
    CHECK(dp.a == doctest::Approx(1.0));
    CHECK(dp.b == doctest::Approx(1.0));
    CHECK(dp.d == doctest::Approx(1.0));
}

TEST_CASE("critical wavenumber arithmetic") {
    PhysicalParams p;
    p.r0 = 1.0;
    p.r1.reset();
    p.kappa = 1.0;
    p.rho = 1.0;
    p.c = 1.0; // a = 1
    p.tau = 0.25;
    const DerivedParams dp = derive_params(p);
    CHECK(dp.k0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dp.wave_speed == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(dp.wave_speed * dp.wave_speed * dp.eps == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("validation names the offending field") {
    PhysicalParams p = default_case();
    p.rho = -1.0;
    CHECK_THROWS_WITH_AS(derive_params(p), doctest::Contains("rho"), param_error);
    p = default_case();
    p.r1 = p.r0 / 2.0;
    CHECK_THROWS_WITH_AS(derive_params(p), doctest::Contains("r1"), param_error);
    p = default_case();
    p.tau = 0.0;
    CHECK_THROWS_AS(derive_params(p), param_error);
}

TEST_CASE("omega roots at the anchors") {
    PhysicalParams p;
    p.r0 = 1.0;
    p.r1.reset();
    p.kappa = 1.0;
    p.rho = 1.0;
    p.c = 1.0;
    p.tau = 1.0; // a = 1, k0 = 1/2
    const DerivedParams dp = derive_params(p);

    const OmegaRoots w0 = omega_roots(0.0, dp, p.tau);
    CHECK(w0.omega_plus == std::complex<double>(0.0, 0.0));
    CHECK(w0.omega_minus.real() == doctest::Approx(-1.0));

    const OmegaRoots wc = omega_roots(dp.k0, dp, p.tau);
    CHECK(wc.branch == OmegaBranch::CriticalDouble);
    CHECK(wc.omega_plus.real() == doctest::Approx(-0.5));

    // k = 2 k0 with tau = a = 1: w = -1/2 +- i sqrt(3)/2
    const OmegaRoots ws = omega_roots(2.0 * dp.k0, dp, p.tau);
    CHECK(ws.branch == OmegaBranch::SupercriticalComplexPair);
    CHECK(ws.omega_plus.real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(ws.omega_plus.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(ws.omega_minus == std::conj(ws.omega_plus));
}

TEST_CASE("root identities hold for 1000 random samples") {
    std::mt19937_64 rng(123456u);
    std::uniform_real_distribution<double> loga(-8.0, 0.0), logt(-4.0, 2.0), fk(0.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        PhysicalParams p = default_case();
        const double a_target = std::pow(10.0, loga(rng));
        p.kappa = a_target * p.rho * p.c;
        p.tau = std::pow(10.0, logt(rng));
        const DerivedParams dp = derive_params(p);
        const double k = fk(rng) * dp.k0;
        const OmegaRoots w = omega_roots(k, dp, p.tau);

        const std::complex<double> sum = w.omega_plus + w.omega_minus;
        const std::complex<double> prod = w.omega_plus * w.omega_minus;
        CHECK(std::abs(sum - std::complex<double>(-1.0 / p.tau)) <= 1e-12 / p.tau);
        const double target = dp.a * k * k / p.tau;
        CHECK(std::abs(prod - std::complex<double>(target)) <= 1e-12 * std::max(target, 1e-300));

        // quadratic residual eps w^2 + w/a + k^2 in scaled form
        const std::complex<double> res =
            dp.eps * w.omega_plus * w.omega_plus + w.omega_plus / dp.a + k * k;
        const double scale = std::abs(dp.eps * w.omega_plus * w.omega_plus) +
                             std::abs(w.omega_plus / dp.a) + k * k;
        if (scale > 0.0) CHECK(std::abs(res) <= 1e-12 * scale);
    }
}

TEST_CASE("branch classification flips exactly at k0") {
    const PhysicalParams p = default_case();
    const DerivedParams dp = derive_params(p);
    const double below = std::nextafter(dp.k0, 0.0);
    const double above = std::nextafter(dp.k0, 2.0 * dp.k0);
    CHECK(omega_roots(below, dp, p.tau).branch == OmegaBranch::SubcriticalRealPair);
    CHECK(omega_roots(dp.k0, dp, p.tau).branch == OmegaBranch::CriticalDouble);
    CHECK(omega_roots(above, dp, p.tau).branch == OmegaBranch::SupercriticalComplexPair);

    // real roots stay real and nonpositive below k0, ordered w- <= w+
    const OmegaRoots w = omega_roots(below, dp, p.tau);
    CHECK(w.omega_plus.imag() == 0.0);
    CHECK(w.omega_plus.real() <= 0.0);
    CHECK(w.omega_minus.real() <= w.omega_plus.real());
}
