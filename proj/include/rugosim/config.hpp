// Experiment configuration: one JSON document describing the thrust profile,
// drag, contact noise, redundancy grid, transport task, and run parameters.
//
// Parsing is strict: unknown keys are rejected with a diagnostic naming the
// key and where it appeared, so a typo cannot silently fall back to a
// default and corrupt a reproducibility audit.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "estimator.hpp"
#include "io.hpp"

namespace rugosim {

using ordered_json = nlohmann::ordered_json;

/// Everything a command needs to run one experiment sweep.
struct ExperimentConfig {
    ThrustProfile profile = ThrustProfile::constant(1.0, 1.0);
    DragModel drag{1.0};
    NoiseModel noise{0.5, true};
    std::vector<int> modules{1, 2, 4, 8}; // spatial redundancy grid (N values)
    std::vector<int> periods{1};          // temporal redundancy grid (T values)
    TransportTask task{};
    int replicates = 10000;
    std::uint64_t seed = 42;
    int threads = 1;
    std::optional<std::string> output_dir;

    void validate() const {
        drag.validate();
        noise.validate();
        task.validate();
        if (modules.empty()) throw std::invalid_argument("config: grid.modules must be nonempty");
        if (periods.empty()) throw std::invalid_argument("config: grid.periods must be nonempty");
        for (int n : modules)
            if (n < 1) throw std::invalid_argument("config: grid.modules entries must be >= 1");
        for (int t : periods)
            if (t < 1) throw std::invalid_argument("config: grid.periods entries must be >= 1");
        if (replicates < 1) throw std::invalid_argument("config: replicates must be >= 1");
        if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    }
};

namespace detail {

inline void reject_unknown_keys(const ordered_json& obj, const std::string& where,
                                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known)
            throw std::invalid_argument("config: unknown key \"" + item.key() + "\" in " + where);
    }
}

inline const ordered_json& expect_object(const ordered_json& value, const std::string& where) {
    if (!value.is_object())
        throw std::invalid_argument("config: " + where + " must be a JSON object");
    return value;
}

template <typename T>
T get_or(const ordered_json& obj, const char* key, const T& fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("config: bad value for \"" + std::string(key) + "\" in " +
                                    where);
    }
}

inline ThrustProfile parse_profile(const ordered_json& obj) {
    expect_object(obj, "profile");
    const std::string kind = get_or<std::string>(obj, "kind", "constant", "profile");
    if (kind == "constant") {
        reject_unknown_keys(obj, "profile", {"kind", "level", "tau"});
        return ThrustProfile::constant(get_or(obj, "level", 1.0, "profile"),
                                       get_or(obj, "tau", 1.0, "profile"));
    }
    if (kind == "linear_ramp") {
        reject_unknown_keys(obj, "profile", {"kind", "peak", "tau"});
        return ThrustProfile::linear_ramp(get_or(obj, "peak", 1.0, "profile"),
                                          get_or(obj, "tau", 1.0, "profile"));
    }
    if (kind == "tabulated") {
        reject_unknown_keys(obj, "profile", {"kind", "tau", "times", "thrusts"});
        if (!obj.contains("times") || !obj.contains("thrusts"))
            throw std::invalid_argument(
                "config: tabulated profile needs \"times\" and \"thrusts\" arrays");
        return ThrustProfile::tabulated(get_or(obj, "tau", 1.0, "profile"),
                                        get_or(obj, "times", std::vector<double>{}, "profile"),
                                        get_or(obj, "thrusts", std::vector<double>{}, "profile"));
    }
    throw std::invalid_argument("config: unknown profile kind \"" + kind + "\"");
}

} // namespace detail

/// Parse and validate a config document. Every key is optional (defaults
/// above); unknown keys anywhere are an error naming the key.
inline ExperimentConfig parse_config(const ordered_json& doc) {
    using detail::expect_object;
    using detail::get_or;
    using detail::reject_unknown_keys;

    expect_object(doc, "top level");
    reject_unknown_keys(doc, "top level",
                        {"profile", "drag", "noise", "grid", "task", "replicates", "seed",
                         "threads", "output_dir"});

    ExperimentConfig cfg;
    if (doc.contains("profile")) cfg.profile = detail::parse_profile(doc.at("profile"));

    if (doc.contains("drag")) {
        const auto& drag = expect_object(doc.at("drag"), "drag");
        reject_unknown_keys(drag, "drag", {"gamma"});
        cfg.drag.gamma = get_or(drag, "gamma", 1.0, "drag");
    }
    if (doc.contains("noise")) {
        const auto& noise = expect_object(doc.at("noise"), "noise");
        reject_unknown_keys(noise, "noise", {"b", "enabled"});
        cfg.noise.b = get_or(noise, "b", 0.5, "noise");
        cfg.noise.enabled = get_or(noise, "enabled", true, "noise");
    }
    if (doc.contains("grid")) {
        const auto& grid = expect_object(doc.at("grid"), "grid");
        reject_unknown_keys(grid, "grid", {"modules", "periods"});
        cfg.modules = get_or(grid, "modules", cfg.modules, "grid");
        cfg.periods = get_or(grid, "periods", cfg.periods, "grid");
    }
    if (doc.contains("task")) {
        const auto& task = expect_object(doc.at("task"), "task");
        reject_unknown_keys(task, "task",
                            {"distance", "scheduled_periods", "epsilon", "p0", "k"});
        cfg.task.distance = get_or(task, "distance", cfg.task.distance, "task");
        cfg.task.scheduled_periods =
            get_or(task, "scheduled_periods", cfg.task.scheduled_periods, "task");
        cfg.task.epsilon = get_or(task, "epsilon", cfg.task.epsilon, "task");
        cfg.task.p0 = get_or(task, "p0", cfg.task.p0, "task");
        cfg.task.k = get_or(task, "k", cfg.task.k, "task");
    }
    cfg.replicates = get_or(doc, "replicates", cfg.replicates, "top level");
    cfg.seed = get_or(doc, "seed", cfg.seed, "top level");
    cfg.threads = get_or(doc, "threads", cfg.threads, "top level");
    if (doc.contains("output_dir"))
        cfg.output_dir = get_or<std::string>(doc, "output_dir", "", "top level");

    cfg.validate();
    return cfg;
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument("config: " + path.string() + " is not valid JSON: " +
                                    err.what());
    }
    return parse_config(doc);
}

} // namespace rugosim
