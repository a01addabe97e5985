#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "ablation/oscillatory.hpp"

using namespace ablation;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("segment summation reaches the Abel value of a non-decaying tail") {
    // int_0^inf sin(y) dy = 1 in the Abel sense; segments at the sine zeros
    // give the alternating +-2 series whose accelerated value is 1.
    auto f = [](double y) { return std::sin(y); };
    double target = kPi;
    auto next = [&]() {
        const double z = target;
        target += kPi;
        return z;
    };
    const auto tail = sum_oscillatory_segments(f, 0.0, next, {1e-13, 1e-13, 40}, 1e-10, 60);
    CHECK(tail.converged);
    CHECK(tail.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("segment summation with damped amplitude converges quickly") {
    // int_0^inf sin(y) e^{-y/10} dy = 1/(1 + 1/100) = 100/101.
    auto f = [](double y) { return std::sin(y) * std::exp(-y / 10.0); };
    double target = kPi;
    auto next = [&]() {
        const double z = target;
        target += kPi;
        return z;
    };
    const auto tail = sum_oscillatory_segments(f, 0.0, next, {1e-14, 1e-14, 40}, 1e-11, 80);
    CHECK(tail.converged);
    CHECK(tail.value == doctest::Approx(100.0 / 101.0).epsilon(1e-10));
}

TEST_CASE("generator exhaustion is reported, prefix preserved") {
    auto f = [](double y) { return 1.0 / (1.0 + y * y); };
    int calls = 0;
    auto next = [&]() -> double {
        ++calls;
        if (calls > 3) return std::numeric_limits<double>::quiet_NaN();
        return static_cast<double>(calls);
    };
    const auto tail = sum_oscillatory_segments(f, 0.0, next, {1e-12, 1e-12, 40}, 1e-14, 60);
    CHECK(!tail.converged);
    CHECK(tail.exhausted);
    CHECK(tail.segments == 3);
    CHECK(tail.last_breakpoint == 3.0);
}

TEST_CASE("phase crossing honors direction and limits") {
    auto psi = [](double y) { return 10.0 - y * y; }; // decreasing
    const double y = phase_crossing(psi, 0.5, 1.0, -1, 0.3, 50.0);
    CHECK(y == doctest::Approx(3.0).epsilon(1e-10));
    // target already passed
    CHECK(phase_crossing(psi, 0.5, 20.0, -1, 0.3, 50.0) == 0.5);
    // unreachable before the limit
    CHECK(std::isnan(phase_crossing(psi, 0.5, -1e6, -1, 0.3, 50.0)));
}
