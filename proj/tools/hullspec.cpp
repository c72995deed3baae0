#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "hullspec/config.hpp"
#include "hullspec/error.hpp"
#include "hullspec/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spectral experiments for operator families over hulls"};
    app.set_version_flag("--version", hullspec::kVersion);
    std::string scenario;
    std::string config_path;
    std::string out_dir;
    std::size_t threads = 0;
    bool svg = false;
    app.add_option("scenario", scenario, "Scenario to run")
        ->required()
        ->check(CLI::IsMember(hullspec::scenario_names()));
    app.add_option("--config", config_path, "Experiment config (TOML)")->required();
    app.add_option("--out", out_dir, "Output directory (overrides output_dir)");
    app.add_option("--threads", threads, "Worker threads for grid evaluation (overrides threads)");
    app.add_flag("--svg", svg, "Also write SVG figures");
    CLI11_PARSE(app, argc, argv);

    try {
        const auto config = hullspec::load_config(config_path);
        const auto result = hullspec::run_scenario(scenario, config, {out_dir, threads, svg, config_path});
        for (const auto& m : result.messages) std::fprintf(stderr, "%s\n", m.c_str());
        return result.exit_code;
    } catch (const hullspec::ParseError& e) {
        std::fprintf(stderr, "%s:%s\n", config_path.c_str(), e.what());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
    }
    return hullspec::kExitError;
}
