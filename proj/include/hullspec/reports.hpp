#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hullspec/configuration.hpp"
#include "hullspec/limit_operator.hpp"
#include "hullspec/pseudospectrum.hpp"
#include "hullspec/scheme.hpp"
#include "hullspec/section.hpp"
#include "hullspec/spectrum.hpp"
#include "hullspec/subshift.hpp"

namespace hullspec {

/// Keep the eigenvalues of the section on W that lie within
/// delta_constant / |W| of the eigenvalues on each enlarged window.
struct PersistenceOptions {
    bool enabled = true;
    std::vector<std::size_t> enlargements{1, 2, 3};
    double delta_constant = 2.0;
};

/// Boxes grow by d on every side, balls by d in radius.
Window enlarge(const Window& window, std::size_t d);

std::vector<Complex> persistent_spectrum(const CoefficientScheme& scheme, const Configuration& omega,
                                         const Window& window, Boundary boundary, const PersistenceOptions& options);

struct GridSpec {
    Window window;
    Rectangle rectangle;
    Resolution resolution;
    /// Deviation is measured only where both grids exceed this.
    double cutoff = 0.05;
    std::vector<double> epsilons;
};

struct ConstancyTolerances {
    double hausdorff = std::numeric_limits<double>::infinity();
    double grid = std::numeric_limits<double>::infinity();
    /// Difference of epsilon-sublevel node counts, as a fraction of all nodes.
    double area_fraction = std::numeric_limits<double>::infinity();
};

/// Level at which the hypothesis (minimal hull, or every configuration
/// pseudoergodic) is certified.
struct CertificationLevel {
    std::size_t n = 3;
    std::size_t big_n = 0;      ///< minimality check when > n (lattice hulls)
    std::size_t radius = 200;   ///< pseudoergodic search radius
};

struct ConstancyInput {
    std::string hull_name;
    const SubshiftSpec* hull = nullptr;
    std::vector<Configuration> configurations;
    std::vector<Window> windows;
    Boundary boundary = Boundary::truncate;
    PersistenceOptions persistence;
    std::optional<GridSpec> grid;
    ConstancyTolerances tolerances;
    std::optional<CertificationLevel> certification;
    std::size_t threads = 1;
};

struct ConstancyPair {
    std::size_t first = 0;
    std::size_t second = 0;
    /// One entry per window, in input order.
    std::vector<double> hausdorff;
    std::optional<double> grid_deviation;
    /// Per epsilon: |count_a - count_b| / nodes.
    std::vector<double> area_differences;
};

struct ConstancyReport {
    std::string hull;
    std::string scheme;
    std::vector<std::string> configurations;
    std::vector<std::size_t> window_sizes;
    Boundary boundary = Boundary::truncate;
    PersistenceOptions persistence;
    std::optional<GridSpec> grid;
    ConstancyTolerances tolerances;
    bool hypothesis_verified = false;
    std::string hypothesis;
    std::vector<ConstancyPair> pairs;
    /// Compared point sets: spectra[config][window].
    std::vector<std::vector<std::vector<Complex>>> spectra;
    std::vector<PseudospectrumGrid> grids;
    bool monotone = true;
    bool within_tolerance = true;
    bool pass = false;
};

/// Pairwise comparison of spectra (and optionally sigma_min grids) of the
/// configurations. Passes iff every pair is non-increasing over the window
/// schedule and all values at the last window meet the tolerances.
ConstancyReport constancy_report(const CoefficientScheme& scheme, const ConstancyInput& input);

struct InclusionEntry {
    std::size_t probe = 0;
    double distance = 0.0;
    bool consistent = false;
};

struct InclusionReport {
    Window window;
    double tolerance = 0.0;
    std::vector<InclusionEntry> entries;
    bool all_consistent = true;
};

/// Directed Hausdorff distance from the eigenvalues of each probe's limit
/// section to those of A(omega)'s section on W. Finite sections only
/// approximate spectra, so this is evidence for the inclusion, not a proof.
InclusionReport inclusion_check(const CoefficientScheme& scheme, const Configuration& omega,
                                const std::vector<LimitOperatorProbe>& probes, const Window& window,
                                Boundary boundary, double tolerance);

} // namespace hullspec
