// Command-line front end: sim sweeps, figure-panel reproduction, terrain
// generation, and contact-noise fitting. All real work lives in the headers;
// this file only parses arguments and maps exceptions to exit codes.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rugosim/commands.hpp"

namespace {

std::optional<std::string> opt_string(const std::string& value) {
    if (value.empty()) return std::nullopt;
    return value;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rugosim: stochastic matter transport over rugose terrain"};
    app.require_subcommand(1);

    std::string sim_config;
    CLI::App* sim = app.add_subcommand("sim", "Run the (N, T) ensemble sweep from a config file");
    sim->add_option("--config", sim_config, "JSON experiment config")
        ->required()
        ->check(CLI::ExistingFile);

    std::string panel;
    std::string fig3_config;
    CLI::App* fig3 =
        app.add_subcommand("reproduce-fig3", "Rebuild one redundancy figure panel (CSV + SVG)");
    fig3->add_option("--panel", panel, "Panel: E (velocity CDFs), F (destination intervals), "
                                       "G (success probability), H (minimal redundancy)")
        ->required()
        ->check(CLI::IsMember({"E", "F", "G", "H"}));
    fig3->add_option("--config", fig3_config, "JSON config overriding the panel defaults")
        ->check(CLI::ExistingFile);

    int rows = 0;
    int cols = 0;
    double target_rg = 0.0;
    std::uint64_t terrain_seed = 0;
    double block_side = 0.1;
    int height_levels = 7;
    std::string terrain_out;
    CLI::App* terrain = app.add_subcommand("terrain", "Generate a rugose block heightmap");
    terrain->add_option("--rows", rows, "Grid rows")->required();
    terrain->add_option("--cols", cols, "Grid columns")->required();
    terrain->add_option("--rg", target_rg, "Target rugosity (height std / block side)")
        ->required();
    terrain->add_option("--seed", terrain_seed, "RNG seed")->required();
    terrain->add_option("--block-side", block_side, "Block side length (default 0.1)");
    terrain->add_option("--levels", height_levels, "Raw height levels before rescale (default 7)");
    terrain->add_option("--out", terrain_out, "Output directory");

    std::string log_path;
    std::string fit_out;
    CLI::App* fit =
        app.add_subcommand("fit-b", "Estimate the contact-noise level from a duration log");
    fit->add_option("--log", log_path, "CSV log with a '# tau=' line and a tau_u column")
        ->required()
        ->check(CLI::ExistingFile);
    fit->add_option("--out", fit_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        rugosim::CommandResult result;
        if (sim->parsed()) {
            result = rugosim::cmd_sim(rugosim::load_config(sim_config));
        } else if (fig3->parsed()) {
            const rugosim::ExperimentConfig cfg = fig3_config.empty()
                                                      ? rugosim::fig3_default_config(panel[0])
                                                      : rugosim::load_config(fig3_config);
            result = rugosim::cmd_reproduce_fig3(panel[0], cfg);
        } else if (terrain->parsed()) {
            result = rugosim::cmd_terrain(rows, cols, target_rg, terrain_seed, block_side,
                                          height_levels, opt_string(terrain_out));
        } else if (fit->parsed()) {
            result = rugosim::cmd_fit_b(log_path, opt_string(fit_out));
        }
        for (const auto& file : result.files) std::cout << "wrote " << file.string() << "\n";
        return 0;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
