// Command layer behind the CLI: experiment sweeps and file emission. Each
// command is a pure function of (config, arguments) to a set of CSV/JSON/SVG
// files — no global state, no clocks — so re-runs are byte-identical and
// thread count only affects wall time.
#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "svg.hpp"
#include "terrain.hpp"

namespace rugosim {

struct CommandResult {
    std::vector<std::filesystem::path> files;
};

namespace detail {

inline std::uint64_t combo_seed(std::uint64_t seed, int modules, int periods) {
    return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(modules)),
                       static_cast<std::uint64_t>(periods));
}

inline void emit(CommandResult& result, const std::filesystem::path& path,
                 const std::string& content) {
    write_text_file(path, content);
    result.files.push_back(path);
}

inline std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

/// Ceiled bound with a tiny downward nudge so an analytically-integer bound
/// that lands epsilon above its true value does not ceil one step too high.
inline int ceil_bound(double bound) {
    return static_cast<int>(std::ceil(bound - 1e-9));
}

} // namespace detail

/// Run the (N, T) sweep described by the config. Writes samples.csv (one row
/// per replicate per combo) and summary.json (per-combo moments, 90% CIs,
/// and the closed-form companions).
inline CommandResult cmd_sim(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::filesystem::path out_dir = resolve_output_dir(cfg.output_dir);
    const double tau = cfg.profile.tau();
    const double v_open = nominal_velocity(cfg.profile, cfg.drag);
    const double c_s = estimate_cs(cfg.profile, cfg.drag, cfg.noise);
    const double b = cfg.noise.enabled ? cfg.noise.b : 0.0;

    CsvDoc csv;
    csv.comment("seed", cfg.seed);
    csv.comment("replicates", cfg.replicates);
    csv.comment("tau", tau);
    csv.comment("v_open", v_open);
    csv.row("replicate", "N", "T", "v_hat", "D_hat");

    ordered_json summary;
    summary["seed"] = cfg.seed;
    summary["replicates"] = cfg.replicates;
    summary["tau"] = tau;
    summary["v_open"] = v_open;
    summary["noise_b"] = b;
    summary["c_s"] = c_s;
    const bool have_bound = cfg.task.k * cfg.task.distance >= 1.0;
    summary["bound_n"] =
        have_bound ? ordered_json(bound_minimal_redundancy(cfg.task, b)) : ordered_json(nullptr);
    summary["combos"] = ordered_json::array();

    for (int n : cfg.modules) {
        for (int t : cfg.periods) {
            const SimResult res =
                ensemble(cfg.profile, cfg.drag, cfg.noise, RedundancyConfig{n, t}, cfg.replicates,
                         detail::combo_seed(cfg.seed, n, t), cfg.threads);
            const double horizon = static_cast<double>(t) * tau;
            for (int r = 0; r < cfg.replicates; ++r)
                csv.row(r, n, t, res.samples[r], res.samples[r] * horizon);

            const auto [v_lo, v_hi] = destination_ci(res, 0.90);
            ordered_json combo;
            combo["modules"] = n;
            combo["periods"] = t;
            combo["mean_v"] = res.mean();
            combo["variance_v"] = res.variance();
            combo["std_error_v"] = res.std_error();
            combo["ci90_v"] = {v_lo, v_hi};
            combo["mean_d"] = res.mean() * horizon;
            combo["ci90_d"] = {v_lo * horizon, v_hi * horizon};
            combo["mean_approx"] = (1.0 - std::pow(b, n)) * c_s;
            summary["combos"].push_back(combo);
        }
    }

    CommandResult result;
    detail::emit(result, out_dir / "samples.csv", csv.str());
    detail::emit(result, out_dir / "summary.json", detail::dump_json(summary));
    return result;
}

/// Per-panel defaults for the figure pipelines (used when no config file is
/// given): constant unit profile, b = 0.5, and a grid/replicate budget sized
/// for the panel's sweep.
inline ExperimentConfig fig3_default_config(char panel) {
    ExperimentConfig cfg;
    cfg.threads = 4;
    switch (panel) {
    case 'E':
        cfg.modules = {1, 8};
        cfg.periods = {1, 8};
        cfg.replicates = 10000;
        break;
    case 'F':
        cfg.modules = {1, 8};
        cfg.replicates = 10000;
        break;
    case 'G':
        cfg.modules = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        cfg.task.scheduled_periods = 1;
        cfg.replicates = 20000;
        break;
    case 'H':
        cfg.replicates = 40000;
        break;
    default: throw std::invalid_argument("fig3: unknown panel");
    }
    return cfg;
}

namespace detail {

/// Panel E: empirical CDFs of v_hat / v_open for each (T, N) grid combo.
inline CommandResult fig3_panel_e(const ExperimentConfig& cfg,
                                  const std::filesystem::path& out_dir) {
    const double v_open = nominal_velocity(cfg.profile, cfg.drag);

    CsvDoc csv;
    csv.comment("seed", cfg.seed);
    csv.comment("replicates", cfg.replicates);
    csv.comment("b", cfg.noise.enabled ? cfg.noise.b : 0.0);
    csv.comment("v_open", v_open);
    csv.row("T", "N", "v_over_vopen", "cdf");

    ChartSpec chart;
    chart.title = "Velocity CDF under temporal/spatial redundancy";
    chart.x_label = "v / v_open";
    chart.y_label = "CDF";
    chart.seed = cfg.seed;

    for (int t : cfg.periods) {
        for (int n : cfg.modules) {
            const SimResult res =
                ensemble(cfg.profile, cfg.drag, cfg.noise, RedundancyConfig{n, t}, cfg.replicates,
                         combo_seed(cfg.seed, n, t), cfg.threads);
            Series series;
            series.label = "T=" + std::to_string(t) + " N=" + std::to_string(n);
            for (const auto& [value, position] : res.cdf()) {
                csv.row(t, n, value / v_open, position);
                series.points.emplace_back(value / v_open, position);
            }
            chart.series.push_back(std::move(series));
        }
    }

    CommandResult result;
    emit(result, out_dir / "fig3E.csv", csv.str());
    emit(result, out_dir / "fig3E.svg", render_chart(chart));
    return result;
}

/// Panel F: 90% interval of the realized destination versus scheduled
/// periods, one band per N, with the nominal line v_open * T * tau.
inline CommandResult fig3_panel_f(const ExperimentConfig& cfg,
                                  const std::filesystem::path& out_dir) {
    const double tau = cfg.profile.tau();
    const double v_open = nominal_velocity(cfg.profile, cfg.drag);
    constexpr int kMaxPeriods = 16;

    CsvDoc csv;
    csv.comment("seed", cfg.seed);
    csv.comment("replicates", cfg.replicates);
    csv.comment("b", cfg.noise.enabled ? cfg.noise.b : 0.0);
    csv.comment("v_open", v_open);
    csv.row("T", "N", "ci_lo", "ci_hi", "nominal");

    ChartSpec chart;
    chart.title = "90% destination interval vs schedule";
    chart.x_label = "T (periods)";
    chart.y_label = "destination";
    chart.seed = cfg.seed;

    Series nominal;
    nominal.label = "nominal";
    for (int n : cfg.modules) {
        Series lower, upper;
        lower.label = "N=" + std::to_string(n) + " lo";
        upper.label = "N=" + std::to_string(n) + " hi";
        for (int t = 1; t <= kMaxPeriods; ++t) {
            const SimResult res =
                ensemble(cfg.profile, cfg.drag, cfg.noise, RedundancyConfig{n, t}, cfg.replicates,
                         combo_seed(cfg.seed, n, t), cfg.threads);
            const double horizon = static_cast<double>(t) * tau;
            const auto [v_lo, v_hi] = destination_ci(res, 0.90);
            const double target = v_open * horizon;
            csv.row(t, n, v_lo * horizon, v_hi * horizon, target);
            lower.points.emplace_back(t, v_lo * horizon);
            upper.points.emplace_back(t, v_hi * horizon);
            if (n == cfg.modules.front()) nominal.points.emplace_back(t, target);
        }
        chart.series.push_back(std::move(lower));
        chart.series.push_back(std::move(upper));
    }
    chart.series.push_back(std::move(nominal));

    CommandResult result;
    emit(result, out_dir / "fig3F.csv", csv.str());
    emit(result, out_dir / "fig3F.svg", render_chart(chart));
    return result;
}

/// Panel G: on-schedule success probability versus N for several tolerance
/// levels, against the single-period analytic ceiling 1 - b^N.
inline CommandResult fig3_panel_g(const ExperimentConfig& cfg,
                                  const std::filesystem::path& out_dir) {
    const double tau = cfg.profile.tau();
    const double v_open = nominal_velocity(cfg.profile, cfg.drag);
    const double b = cfg.noise.enabled ? cfg.noise.b : 0.0;
    const int t = cfg.task.scheduled_periods;
    const double target = v_open * tau * static_cast<double>(t);
    const std::vector<double> epsilon_rel{0.02, 0.05, 0.1, 0.2};

    CsvDoc csv;
    csv.comment("seed", cfg.seed);
    csv.comment("replicates", cfg.replicates);
    csv.comment("b", b);
    csv.comment("T", t);
    csv.comment("distance", target);
    csv.row("epsilon", "N", "p_success", "std_err", "p_limit");

    // One ensemble per N, shared by every tolerance level.
    std::vector<SimResult> per_n;
    per_n.reserve(cfg.modules.size());
    for (int n : cfg.modules)
        per_n.push_back(ensemble(cfg.profile, cfg.drag, cfg.noise, RedundancyConfig{n, t},
                                 cfg.replicates,
                                 derive_seed(cfg.seed, static_cast<std::uint64_t>(n)),
                                 cfg.threads));

    ChartSpec chart;
    chart.title = "Scheduled-transport success probability";
    chart.x_label = "N (modules)";
    chart.y_label = "P(success)";
    chart.seed = cfg.seed;

    for (double rel : epsilon_rel) {
        const double epsilon = rel * target;
        Series series;
        series.label = "eps/D=" + format_double(rel);
        for (std::size_t i = 0; i < cfg.modules.size(); ++i) {
            const int n = cfg.modules[i];
            int hits = 0;
            for (double v : per_n[i].samples)
                if (std::abs(v * tau * t - target) < epsilon) ++hits;
            const double p = static_cast<double>(hits) / static_cast<double>(cfg.replicates);
            const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.replicates));
            const double limit = 1.0 - std::pow(b, n);
            csv.row(epsilon, n, p, se, limit);
            series.points.emplace_back(n, p);
        }
        chart.series.push_back(std::move(series));
    }
    Series limit_curve;
    limit_curve.label = "1-b^N";
    for (int n : cfg.modules) limit_curve.points.emplace_back(n, 1.0 - std::pow(b, n));
    chart.series.push_back(std::move(limit_curve));

    CommandResult result;
    emit(result, out_dir / "fig3G.csv", csv.str());
    emit(result, out_dir / "fig3G.svg", render_chart(chart));
    return result;
}

/// Panel H: minimal spatial redundancy versus noise level b, empirical scan
/// against the closed-form bound, for several (p0, k*D) requirements.
inline CommandResult fig3_panel_h(const ExperimentConfig& cfg,
                                  const std::filesystem::path& out_dir) {
    const double tau = cfg.profile.tau();
    const double v_open = nominal_velocity(cfg.profile, cfg.drag);
    constexpr int kMaxModules = 64;
    constexpr double kScanSlackSe = 3.0;
    const std::vector<std::pair<double, int>> requirements{{0.9, 1}, {0.8, 1}, {0.9, 2}};
    std::vector<double> b_values;
    for (int i = 1; i <= 9; ++i) b_values.push_back(i / 10.0);

    CsvDoc csv;
    csv.comment("seed", cfg.seed);
    csv.comment("replicates", cfg.replicates);
    csv.comment("n_max", kMaxModules);
    csv.row("b", "p0", "k_distance", "epsilon", "n_empirical", "bound", "bound_ceil");

    ChartSpec chart;
    chart.title = "Minimal spatial redundancy vs noise level";
    chart.x_label = "b";
    chart.y_label = "N";
    chart.seed = cfg.seed;

    for (std::size_t req = 0; req < requirements.size(); ++req) {
        const auto [p0, k_distance] = requirements[req];
        TransportTask task;
        task.k = 1.0 / (v_open * tau);
        task.distance = static_cast<double>(k_distance) / task.k;
        task.scheduled_periods = k_distance;
        task.epsilon = 1e-6 * v_open * tau;
        task.p0 = p0;

        Series empirical;
        empirical.label =
            "empirical p0=" + format_double(p0) + " kD=" + std::to_string(k_distance);
        for (std::size_t bi = 0; bi < b_values.size(); ++bi) {
            const double b = b_values[bi];
            const std::uint64_t sweep_seed =
                derive_seed(derive_seed(cfg.seed, static_cast<std::uint64_t>(req)),
                            static_cast<std::uint64_t>(bi));
            const auto n_emp = minimal_redundancy_empirical(
                cfg.profile, cfg.drag, NoiseModel{b, true}, task, cfg.replicates, sweep_seed,
                kMaxModules, cfg.threads, kScanSlackSe);
            const double bound = bound_minimal_redundancy(task, b);
            csv.row(b, p0, k_distance, task.epsilon, n_emp ? *n_emp : -1, bound,
                    ceil_bound(bound));
            if (n_emp) empirical.points.emplace_back(b, static_cast<double>(*n_emp));
        }
        chart.series.push_back(std::move(empirical));

        if (p0 == 0.9) {
            Series bound_curve;
            bound_curve.label = "bound p0=0.9 kD=" + std::to_string(k_distance);
            for (int i = 5; i <= 90; ++i) {
                const double b = i / 100.0;
                bound_curve.points.emplace_back(b, bound_minimal_redundancy(task, b));
            }
            chart.series.push_back(std::move(bound_curve));
        }
    }

    CommandResult result;
    emit(result, out_dir / "fig3H.csv", csv.str());
    emit(result, out_dir / "fig3H.svg", render_chart(chart));
    return result;
}

} // namespace detail

/// Reproduce one figure panel (E, F, G, or H) into CSV + SVG.
inline CommandResult cmd_reproduce_fig3(char panel, const ExperimentConfig& cfg) {
    cfg.validate();
    const std::filesystem::path out_dir = resolve_output_dir(cfg.output_dir);
    switch (panel) {
    case 'E': return detail::fig3_panel_e(cfg, out_dir);
    case 'F': return detail::fig3_panel_f(cfg, out_dir);
    case 'G': return detail::fig3_panel_g(cfg, out_dir);
    case 'H': return detail::fig3_panel_h(cfg, out_dir);
    default: throw std::invalid_argument("fig3: unknown panel (expected E, F, G, or H)");
    }
}

/// Generate a heightmap and write it as a CSV grid plus a JSON object.
inline CommandResult cmd_terrain(int rows, int cols, double target_rg, std::uint64_t seed,
                                 double block_side, int height_levels,
                                 const std::optional<std::string>& out_dir_opt) {
    RngStream rng(seed);
    const TerrainMap map = generate_terrain(rows, cols, target_rg, block_side, height_levels, rng);
    const std::filesystem::path out_dir = resolve_output_dir(out_dir_opt);

    CsvDoc csv;
    csv.comment("seed", seed);
    csv.comment("rows", map.rows);
    csv.comment("cols", map.cols);
    csv.comment("block_side", map.block_side);
    csv.comment("rugosity", map.rugosity);
    csv.comment("height_levels", height_levels);
    std::vector<std::string> header;
    header.reserve(map.cols);
    for (int c = 0; c < map.cols; ++c) header.push_back("c" + std::to_string(c));
    csv.raw_row(header);
    for (int r = 0; r < map.rows; ++r) {
        std::vector<std::string> cells;
        cells.reserve(map.cols);
        for (int c = 0; c < map.cols; ++c) cells.push_back(format_double(map.at(r, c)));
        csv.raw_row(cells);
    }

    ordered_json doc;
    doc["seed"] = seed;
    doc["rows"] = map.rows;
    doc["cols"] = map.cols;
    doc["block_side"] = map.block_side;
    doc["rugosity"] = map.rugosity;
    doc["height_levels"] = height_levels;
    doc["heights"] = map.heights;

    CommandResult result;
    detail::emit(result, out_dir / "terrain.csv", csv.str());
    detail::emit(result, out_dir / "terrain.json", detail::dump_json(doc));
    return result;
}

/// Fit the contact-noise level from a duration log CSV; writes
/// noise_fit.json with the estimate and the diagnostic CDF line fit.
inline CommandResult cmd_fit_b(const std::filesystem::path& log_path,
                               const std::optional<std::string>& out_dir_opt) {
    const ContactLog log = read_contact_log(log_path);
    const NoiseEstimate est = estimate_b(log);
    const std::filesystem::path out_dir = resolve_output_dir(out_dir_opt);

    ordered_json doc;
    doc["b_hat"] = est.b_hat;
    doc["sample_count"] = est.sample_count;
    doc["tau"] = est.tau;
    doc["slope"] = est.cdf_fit ? ordered_json(est.cdf_fit->slope) : ordered_json(nullptr);
    doc["intercept"] = est.cdf_fit ? ordered_json(est.cdf_fit->intercept) : ordered_json(nullptr);

    CommandResult result;
    detail::emit(result, out_dir / "noise_fit.json", detail::dump_json(doc));
    return result;
}

} // namespace rugosim
