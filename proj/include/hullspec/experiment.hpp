#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hullspec/catalog.hpp"
#include "hullspec/config.hpp"
#include "hullspec/io.hpp"

namespace hullspec {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitPass = 0, kExitError = 1, kExitAssertion = 2, kExitInconclusive = 3 };

const std::vector<std::string>& scenario_names();

struct RunOptions {
    /// Empty: use the config's output_dir.
    std::string out_dir;
    /// 0: use the config's thread count.
    std::size_t threads = 0;
    bool svg = false;
    /// Path of the config file, echoed into the manifest.
    std::string config_path;
};

struct RunResult {
    int exit_code = kExitPass;
    std::vector<std::string> artifacts;
    std::vector<std::string> messages;
};

/// Runs one scenario and writes its artifacts plus manifest.json. Library
/// errors propagate; the CLI maps them to exit code 1.
RunResult run_scenario(const std::string& name, const ExperimentConfig& config, const RunOptions& options);

/// HULLSPEC_TOLERANCES, else the config's tolerance_file, else
/// data/tolerances.json.
std::string tolerance_path(const ExperimentConfig& config);
Json load_tolerances(const std::string& path);

/// Tolerances from the file entry named by tolerance_key, overridden by the
/// inline [tolerances] table. Unset values are +infinity.
struct ResolvedTolerances {
    double hausdorff;
    double grid;
    double area_fraction;
    double inclusion;
    double floquet;
};
ResolvedTolerances resolve_tolerances(const ExperimentConfig& config);

/// Hull, scheme and configurations described by a config.
struct Model {
    Hull hull;
    CoefficientScheme scheme;
    std::vector<Configuration> configurations;
    std::vector<Window> windows;
};
Model build_model(const ExperimentConfig& config);

/// Escape sequences described by the config's [[sequence]] tables;
/// occurrence sequences use patterns on ball(observation_radius).
std::vector<EscapeSequence> build_sequences(const ExperimentConfig& config, const Model& model,
                                            const Configuration& omega, std::size_t observation_radius);

// Canonical experiments shared by `calibrate` and the acceptance suite.
ExperimentConfig floquet_config(std::size_t q);
ExperimentConfig fibonacci_constancy_config();
ExperimentConfig feinberg_zee_grid_config();
ExperimentConfig fibonacci_inclusion_config();
ExperimentConfig period2_constancy_config();
ExperimentConfig identity_grid_config();

/// Calibration multiplier and floor for measured oracle values.
inline constexpr double kCalibrationFactor = 1.5;
inline constexpr double kCalibrationFloor = 1e-12;
/// Residual scale of the dense eigensolver at desk sizes; Floquet
/// thresholds never go below factor * this.
inline constexpr double kEigenResidualScale = 1e-8;

} // namespace hullspec
