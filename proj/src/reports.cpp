#include "hullspec/reports.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "hullspec/certify.hpp"
#include "hullspec/error.hpp"
#include "hullspec/hausdorff.hpp"

namespace hullspec {

namespace {

// Slack for the trend check; distances that are exactly equal pass.
constexpr double kTrendSlack = 1e-12;

std::string describe_hypothesis(const ConstancyInput& input, bool& verified) {
    verified = false;
    if (!input.certification || input.hull == nullptr) return "not checked";
    const CertificationLevel& level = *input.certification;
    if (input.hull->group().is_lattice() && level.big_n > level.n) {
        const auto cert = certify_minimal(*input.hull, level.n, level.big_n);
        if (cert.certified) {
            verified = true;
            return "hull minimal at (" + std::to_string(level.n) + ", " + std::to_string(level.big_n) + ")";
        }
    }
    if (!input.hull->group().is_lattice()) return "hypothesis unverified: certification needs a lattice";
    for (std::size_t i = 0; i < input.configurations.size(); ++i) {
        const auto cert = certify_pseudoergodic(input.configurations[i], *input.hull, level.n, level.radius);
        if (cert.status != SearchStatus::certified)
            return "hypothesis unverified: configuration " + std::to_string(i) + " not " + std::to_string(level.n) +
                   "-pseudoergodic within radius " + std::to_string(level.radius);
    }
    verified = true;
    return "every configuration " + std::to_string(level.n) + "-pseudoergodic within radius " +
           std::to_string(level.radius);
}

} // namespace

Window enlarge(const Window& window, std::size_t d) {
    const auto step = static_cast<std::int64_t>(d);
    if (const auto* ball = std::get_if<window_kind::Ball>(&window.descriptor()))
        return Window::ball(window.group(), ball->radius + d);
    if (auto box = window.as_box()) {
        for (auto& x : box->lower) x -= step;
        for (auto& x : box->upper) x += step;
        return Window::box(window.group(), box->lower, box->upper);
    }
    throw DomainError("only balls and boxes can be enlarged");
}

std::vector<Complex> persistent_spectrum(const CoefficientScheme& scheme, const Configuration& omega,
                                         const Window& window, Boundary boundary, const PersistenceOptions& options) {
    std::vector<Complex> base = eigenvalues(section(scheme, omega, window, boundary).matrix);
    if (!options.enabled || options.enlargements.empty()) return base;
    std::vector<std::vector<Complex>> others;
    for (std::size_t d : options.enlargements)
        others.push_back(eigenvalues(section(scheme, omega, enlarge(window, d), boundary).matrix));
    const double delta = options.delta_constant / static_cast<double>(window.size());
    return persistent_points(base, others, delta);
}

ConstancyReport constancy_report(const CoefficientScheme& scheme, const ConstancyInput& input) {
    const std::size_t count = input.configurations.size();
    if (count < 2) throw DomainError("constancy needs at least two configurations");
    if (input.windows.empty() && !input.grid) throw DomainError("constancy needs windows or a grid");

    ConstancyReport report;
    report.hull = input.hull_name;
    report.scheme = scheme.name();
    for (const auto& omega : input.configurations) report.configurations.push_back(omega.describe());
    for (const auto& w : input.windows) report.window_sizes.push_back(w.size());
    report.boundary = input.boundary;
    report.persistence = input.persistence;
    report.grid = input.grid;
    report.tolerances = input.tolerances;
    report.hypothesis = describe_hypothesis(input, report.hypothesis_verified);

    report.spectra.resize(count);
    for (std::size_t c = 0; c < count; ++c)
        for (const auto& w : input.windows)
            report.spectra[c].push_back(
                persistent_spectrum(scheme, input.configurations[c], w, input.boundary, input.persistence));

    if (input.grid) {
        for (const auto& omega : input.configurations)
            report.grids.push_back(pseudospectrum_grid(scheme, omega, input.grid->window, input.boundary,
                                                       input.grid->rectangle, input.grid->resolution, input.threads));
    }

    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            ConstancyPair pair{a, b, {}, std::nullopt, {}};
            for (std::size_t w = 0; w < input.windows.size(); ++w) {
                const auto& p = report.spectra[a][w];
                const auto& q = report.spectra[b][w];
                // Persistence may empty a set; treat that as maximally far.
                pair.hausdorff.push_back(p.empty() || q.empty() ? std::numeric_limits<double>::infinity()
                                                                : hausdorff_distance(p, q));
            }
            for (std::size_t w = 1; w < pair.hausdorff.size(); ++w)
                if (pair.hausdorff[w] > pair.hausdorff[w - 1] + kTrendSlack) report.monotone = false;
            if (!pair.hausdorff.empty() && !(pair.hausdorff.back() <= input.tolerances.hausdorff))
                report.within_tolerance = false;

            if (input.grid) {
                const auto& ga = report.grids[a];
                const auto& gb = report.grids[b];
                pair.grid_deviation = max_grid_deviation(ga, gb, input.grid->cutoff);
                if (!(*pair.grid_deviation <= input.tolerances.grid)) report.within_tolerance = false;
                for (double eps : input.grid->epsilons) {
                    const double diff = std::abs(static_cast<double>(sublevel_count(ga, eps)) -
                                                 static_cast<double>(sublevel_count(gb, eps)));
                    pair.area_differences.push_back(diff / static_cast<double>(ga.size()));
                    if (!(pair.area_differences.back() <= input.tolerances.area_fraction))
                        report.within_tolerance = false;
                }
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    report.pass = report.monotone && report.within_tolerance;
    return report;
}

InclusionReport inclusion_check(const CoefficientScheme& scheme, const Configuration& omega,
                                const std::vector<LimitOperatorProbe>& probes, const Window& window,
                                Boundary boundary, double tolerance) {
    InclusionReport report{window, tolerance, {}, true};
    const std::vector<Complex> target = eigenvalues(section(scheme, omega, window, boundary).matrix);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const auto& probe = probes[i];
        if (!probe.stabilized || !probe.limit_section)
            throw DomainError("inclusion check needs stabilized probes; probe " + std::to_string(i) + " is not");
        const double d = directed_distance(eigenvalues(probe.limit_section->matrix), target);
        const bool ok = d <= tolerance;
        report.entries.push_back({i, d, ok});
        report.all_consistent = report.all_consistent && ok;
    }
    return report;
}

} // namespace hullspec
