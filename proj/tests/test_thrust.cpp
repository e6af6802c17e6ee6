#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rugosim/thrust.hpp"

using rugosim::DragModel;
using rugosim::ThrustProfile;

TEST_CASE("nominal thrust of parametric forms", "[thrust]") {
    SECTION("constant f(t) = 2") {
        const auto p = ThrustProfile::constant(2.0, 1.0);
        CHECK(p.nominal_thrust() == 2.0);
        CHECK(p.value_at(0.0) == 2.0);
        CHECK(p.value_at(0.73) == 2.0);
    }
    SECTION("linear ramp f(t) = 2 t / tau") {
        const auto p = ThrustProfile::linear_ramp(2.0, 1.0);
        CHECK(p.nominal_thrust() == Catch::Approx(1.0).margin(1e-15));
        CHECK(p.value_at(0.5) == Catch::Approx(1.0));
        CHECK(p.value_at(0.0) == 0.0);
    }
    SECTION("ramp with tau != 1") {
        const auto p = ThrustProfile::linear_ramp(3.0, 2.0);
        CHECK(p.nominal_thrust() == Catch::Approx(1.5).margin(1e-15));
    }
}

TEST_CASE("tabulated pulse profile matches trapezoid oracle", "[thrust]") {
    // Stance-pulse shape: rise, plateau, fall.
    const std::vector<double> times{0.0, 0.1, 0.25, 0.5, 0.75, 0.9};
    const std::vector<double> vals{0.0, 0.9, 1.4, 1.5, 1.1, 0.3};
    const auto p = ThrustProfile::tabulated(1.0, times, vals);

    testutil::PwlOracle oracle{1.0, times, vals};
    const double fn_oracle =
        testutil::trapezoid_piecewise([&](double t) { return oracle.at(t); }, 0.0, 1.0,
                                      oracle.kinks_between(0.0, 1.0));
    CHECK(p.nominal_thrust() == Catch::Approx(fn_oracle).margin(1e-12));

    SECTION("pointwise values agree with independent interpolation") {
        for (double t : {0.05, 0.1, 0.17, 0.42, 0.55, 0.8, 0.95, 1.3, 2.61})
            CHECK(p.value_at(t) == Catch::Approx(oracle.at(t)).margin(1e-12));
    }

    SECTION("wrapped window integrals agree with the oracle") {
        const struct { double a, b; } windows[] = {
            {0.0, 1.0}, {0.3, 0.6}, {0.75, 1.25}, {0.9, 2.4}, {0.0, 3.0}, {0.42, 0.42}};
        for (const auto& w : windows) {
            const double expected = testutil::trapezoid_piecewise(
                [&](double t) { return oracle.at(t); }, w.a, w.b, oracle.kinks_between(w.a, w.b));
            CHECK(p.integrate(w.a, w.b) == Catch::Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("tabulated profile with offset first sample", "[thrust]") {
    // First sample not at t = 0: the boundary value comes from the wrap segment.
    const auto p = ThrustProfile::tabulated(1.0, {0.2, 0.6}, {1.0, 2.0});
    CHECK(p.value_at(0.0) == Catch::Approx(2.0 - 0.4 / 0.6).margin(1e-12));
    CHECK(p.value_at(0.2) == Catch::Approx(1.0));
    CHECK(p.nominal_thrust() == Catch::Approx(1.5).margin(1e-12));

    testutil::PwlOracle oracle{1.0, {0.2, 0.6}, {1.0, 2.0}};
    const double expected = testutil::trapezoid_piecewise(
        [&](double t) { return oracle.at(t); }, 0.1, 1.7, oracle.kinks_between(0.1, 1.7));
    CHECK(p.integrate(0.1, 1.7) == Catch::Approx(expected).margin(1e-12));
}

TEST_CASE("whole periods integrate to tau * f_n", "[thrust]") {
    const auto p = ThrustProfile::tabulated(2.0, {0.0, 0.5, 1.2}, {0.3, 1.8, 0.6});
    const double fn = p.nominal_thrust();
    CHECK(p.integrate(0.0, 2.0) == Catch::Approx(2.0 * fn).margin(1e-12));
    CHECK(p.integrate(0.7, 4.7) == Catch::Approx(4.0 * fn).margin(1e-12));
}

TEST_CASE("profile validation", "[thrust]") {
    CHECK_THROWS_AS(ThrustProfile::tabulated(1.0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ThrustProfile::tabulated(1.0, {0.0, 0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ThrustProfile::tabulated(1.0, {0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(ThrustProfile::tabulated(1.0, {0.5, 0.2}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(ThrustProfile::constant(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ThrustProfile::constant(1.0, -2.0), std::invalid_argument);

    const auto p = ThrustProfile::constant(1.0, 1.0);
    CHECK_THROWS_AS(p.integrate(0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(p.integrate(-0.1, 0.2), std::invalid_argument);
}

TEST_CASE("drag model nominal velocity", "[thrust]") {
    const auto p = ThrustProfile::constant(3.0, 1.0);
    const DragModel drag{1.5};
    CHECK(rugosim::nominal_velocity(p, drag) == Catch::Approx(2.0));
    CHECK_THROWS_AS(DragModel{0.0}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(DragModel{-1.0}.validate(), std::invalid_argument);
}
