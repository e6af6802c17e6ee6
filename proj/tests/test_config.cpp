#include <catch2/catch_amalgamated.hpp>

#include "rugosim/config.hpp"

using rugosim::ExperimentConfig;
using rugosim::ordered_json;

TEST_CASE("parsing a complete config document", "[config]") {
    const ordered_json doc = ordered_json::parse(R"({
        "profile": {"kind": "tabulated", "tau": 2.0,
                    "times": [0.0, 0.5, 1.0], "thrusts": [1.0, 2.0, 1.5]},
        "drag": {"gamma": 4.0},
        "noise": {"b": 0.3, "enabled": true},
        "grid": {"modules": [1, 8], "periods": [2, 4]},
        "task": {"distance": 3.0, "scheduled_periods": 6, "epsilon": 0.05, "p0": 0.8, "k": 2.0},
        "replicates": 500,
        "seed": 99,
        "threads": 2,
        "output_dir": "out"
    })");
    const ExperimentConfig cfg = rugosim::parse_config(doc);
    CHECK(cfg.profile.tau() == 2.0);
    CHECK(cfg.drag.gamma == 4.0);
    CHECK(cfg.noise.b == 0.3);
    CHECK(cfg.modules == std::vector<int>{1, 8});
    CHECK(cfg.periods == std::vector<int>{2, 4});
    CHECK(cfg.task.distance == 3.0);
    CHECK(cfg.task.scheduled_periods == 6);
    CHECK(cfg.task.epsilon == 0.05);
    CHECK(cfg.task.p0 == 0.8);
    CHECK(cfg.task.k == 2.0);
    CHECK(cfg.replicates == 500);
    CHECK(cfg.seed == 99);
    CHECK(cfg.threads == 2);
    REQUIRE(cfg.output_dir.has_value());
    CHECK(*cfg.output_dir == "out");
}

TEST_CASE("missing keys fall back to defaults", "[config]") {
    const ExperimentConfig cfg = rugosim::parse_config(ordered_json::object());
    CHECK(cfg.profile.tau() == 1.0);
    CHECK(cfg.noise.b == 0.5);
    CHECK(cfg.replicates == 10000);
    CHECK(cfg.seed == 42);
    CHECK(cfg.threads == 1);
    CHECK_FALSE(cfg.output_dir.has_value());
}

TEST_CASE("unknown keys are rejected by name", "[config]") {
    const auto expect_unknown = [](const char* text, const char* key) {
        const ordered_json doc = ordered_json::parse(text);
        try {
            rugosim::parse_config(doc);
            FAIL("expected a parse failure");
        } catch (const std::invalid_argument& err) {
            CHECK(std::string(err.what()).find(key) != std::string::npos);
        }
    };
    expect_unknown(R"({"replicas": 100})", "replicas");
    expect_unknown(R"({"profile": {"kind": "constant", "amplitude": 2.0}})", "amplitude");
    expect_unknown(R"({"drag": {"gama": 1.0}})", "gama");
    expect_unknown(R"({"noise": {"b": 0.5, "sigma": 0.1}})", "sigma");
    expect_unknown(R"({"grid": {"modules": [1], "cols": [1]}})", "cols");
    expect_unknown(R"({"task": {"distance": 1.0, "deadline": 5}})", "deadline");
}

TEST_CASE("invalid values are rejected", "[config]") {
    const auto reject = [](const char* text) {
        CHECK_THROWS_AS(rugosim::parse_config(ordered_json::parse(text)), std::invalid_argument);
    };
    reject(R"({"noise": {"b": 1.5}})");
    reject(R"({"replicates": 0})");
    reject(R"({"threads": 0})");
    reject(R"({"grid": {"modules": []}})");
    reject(R"({"grid": {"modules": [0]}})");
    reject(R"({"profile": {"kind": "square"}})");
    reject(R"({"profile": {"kind": "tabulated", "tau": 1.0}})");
    reject(R"({"task": {"p0": 1.0}})");
    reject(R"({"drag": {"gamma": "one"}})");
}

TEST_CASE("loading a config file", "[config]") {
    const std::filesystem::path path = "config_test_tmp.json";
    rugosim::write_text_file(path, R"({"seed": 123, "replicates": 50})");
    const ExperimentConfig cfg = rugosim::load_config(path);
    CHECK(cfg.seed == 123);
    CHECK(cfg.replicates == 50);

    rugosim::write_text_file(path, "{not json");
    CHECK_THROWS_AS(rugosim::load_config(path), std::invalid_argument);
    std::filesystem::remove(path);
}
