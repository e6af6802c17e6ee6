#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "rugosim/redundancy.hpp"
#include "rugosim/stats.hpp"

using rugosim::BacGrid;
using rugosim::BacOutcome;
using rugosim::DragModel;
using rugosim::NoiseModel;
using rugosim::RedundancyConfig;
using rugosim::RngStream;
using rugosim::ThrustProfile;
using rugosim::TransportOutcome;

TEST_CASE("noiseless transport moves at the open velocity", "[redundancy]") {
    const auto p = ThrustProfile::constant(2.0, 1.0);
    const DragModel drag{4.0};
    RngStream rng(5);
    const TransportOutcome out =
        rugosim::velocity_temporal(p, drag, NoiseModel{0.9, false}, 6, rng);
    CHECK(out.v_hat == Catch::Approx(0.5));
    CHECK(out.d_hat == Catch::Approx(3.0));
}

TEST_CASE("averaging periods with one total loss", "[redundancy]") {
    // Four periods of a unit constant profile where period 1 lost its bac:
    // the run covers 3/4 of the open distance.
    BacGrid grid;
    grid.modules = 1;
    grid.periods = 4;
    grid.cells = {
        BacOutcome{0.0, 1.0, 1.0, 1.0},
        BacOutcome{0.2, 0.0, 0.0, 0.0},
        BacOutcome{0.0, 1.0, 1.0, 1.0},
        BacOutcome{0.0, 1.0, 1.0, 1.0},
    };
    const TransportOutcome out = rugosim::transport_from_grid(grid, DragModel{1.0}, 1.0);
    CHECK(out.v_hat == Catch::Approx(0.75));
    CHECK(out.d_hat == Catch::Approx(3.0));
    REQUIRE(out.per_period_velocity.size() == 4);
    CHECK(out.per_period_velocity[1] == 0.0);
}

TEST_CASE("total loss everywhere yields zero velocity", "[redundancy]") {
    const auto p = ThrustProfile::constant(1.0, 1.0);
    RngStream rng(8);
    const TransportOutcome out =
        rugosim::velocity_spatial(p, DragModel{1.0}, NoiseModel{1.0, true},
                                  RedundancyConfig{4, 4}, rng);
    CHECK(out.v_hat == 0.0);
    CHECK(out.d_hat == 0.0);
}

TEST_CASE("single-module pooling equals plain averaging bit for bit", "[redundancy][property]") {
    const auto p = ThrustProfile::linear_ramp(2.0, 1.0);
    const DragModel drag{1.0};
    const NoiseModel noise{0.5, true};
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        RngStream a(seed), b(seed);
        const TransportOutcome lhs =
            rugosim::velocity_spatial(p, drag, noise, RedundancyConfig{1, 7}, a);
        const TransportOutcome rhs = rugosim::velocity_temporal(p, drag, noise, 7, b);
        CHECK(lhs.v_hat == rhs.v_hat);
        CHECK(lhs.d_hat == rhs.d_hat);
    }
}

TEST_CASE("pooled constant-thrust modules recover the open velocity", "[redundancy][property]") {
    // Constant thrust: every surviving window carries f_hat = f_n, so any
    // period with at least one survivor moves at exactly v_open.
    const auto p = ThrustProfile::constant(3.0, 0.5);
    const DragModel drag{2.0};
    RngStream rng(21);
    const TransportOutcome out = rugosim::velocity_spatial(
        p, drag, NoiseModel{0.4, true}, RedundancyConfig{8, 32}, rng);
    for (double v : out.per_period_velocity) {
        const bool open = std::abs(v - 1.5) < 1e-12;
        CHECK((open || v == 0.0));
    }
}

TEST_CASE("trajectory accumulates per-period displacement", "[redundancy]") {
    const auto p = ThrustProfile::constant(1.0, 1.0);
    RngStream rng(4);
    const std::vector<double> path = rugosim::simulate_trajectory(
        p, DragModel{1.0}, NoiseModel{0.0, false}, RedundancyConfig{1, 5}, rng);
    REQUIRE(path.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(path[i] == Catch::Approx(i + 1.0));

    RngStream lost(9);
    const std::vector<double> stuck = rugosim::simulate_trajectory(
        p, DragModel{1.0}, NoiseModel{1.0, true}, RedundancyConfig{2, 4}, lost);
    for (double d : stuck) CHECK(d == 0.0);
}

TEST_CASE("first passage through a fixed distance", "[redundancy]") {
    const auto p = ThrustProfile::constant(1.0, 1.0);
    const DragModel drag{1.0};

    SECTION("noiseless crossing lands on the exact period") {
        RngStream rng(1);
        const auto t = rugosim::first_passage_time(p, drag, NoiseModel{0.0, false},
                                                   RedundancyConfig{1, 1}, 6.0, rng);
        REQUIRE(t.has_value());
        CHECK(*t == 6);
    }
    SECTION("b = 1 never arrives") {
        RngStream rng(2);
        const auto t = rugosim::first_passage_time(p, drag, NoiseModel{1.0, true},
                                                   RedundancyConfig{1, 1}, 1.0, rng, 50);
        CHECK_FALSE(t.has_value());
    }
    SECTION("mean crossing time matches the harmonic slowdown") {
        // Constant profile, b = 0.125, N = 1: each period advances ~v_open
        // with probability 1 - b, so crossing D = 5.5 needs six surviving
        // periods and the mean first-passage time is 6 / (1 - b) = 48/7.
        // (5.5 rather than 6.0 keeps the check clear of ulp-level rounding
        // in the per-period velocities right at an integer threshold.)
        const double b = 0.125;
        const int n = 4000;
        std::vector<double> times;
        times.reserve(n);
        for (int i = 0; i < n; ++i) {
            RngStream rng(rugosim::derive_seed(77, static_cast<std::uint64_t>(i)));
            const auto t = rugosim::first_passage_time(p, drag, NoiseModel{b, true},
                                                       RedundancyConfig{1, 1}, 5.5, rng);
            REQUIRE(t.has_value());
            times.push_back(static_cast<double>(*t));
        }
        const double m = rugosim::mean(times);
        const double se = rugosim::mean_std_error(times);
        CHECK(std::abs(m - 48.0 / 7.0) <= 3.0 * se);
    }
}
