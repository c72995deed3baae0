#include "hullspec/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "hullspec/certify.hpp"
#include "hullspec/error.hpp"
#include "hullspec/hausdorff.hpp"
#include "hullspec/limit_operator.hpp"
#include "hullspec/limit_set.hpp"
#include "hullspec/linalg.hpp"
#include "hullspec/pseudospectrum.hpp"
#include "hullspec/reports.hpp"
#include "hullspec/spectrum.hpp"

namespace hullspec {

namespace fs = std::filesystem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Residual threshold for computed eigenvalues at desk sizes.
constexpr double kResidualThreshold = 1e-8;
// Eigenvalues whose residual is checked per spectrum (evenly spaced).
constexpr std::size_t kResidualSamples = 16;
// Slack of the norm-dominance check.
constexpr double kNormSlack = 1e-10;

struct Context {
    const ExperimentConfig& config;
    fs::path out;
    std::size_t threads;
    bool svg;
    RunResult result;

    void artifact(const std::string& name) { result.artifacts.push_back(name); }
    std::string path(const std::string& name) const { return (out / name).string(); }
    void note(const std::string& message) { result.messages.push_back(message); }
    void fail(int code, const std::string& message) {
        note(message);
        // Assertion failures dominate inconclusive results.
        if (code == kExitAssertion || result.exit_code == kExitPass) result.exit_code = code;
    }
};

std::string tag(std::size_t c, std::size_t w) { return "c" + std::to_string(c) + "_w" + std::to_string(w); }

double calibrated(double measured) { return std::max(kCalibrationFactor * measured, kCalibrationFloor); }

double entry_value(const Json& entry, const char* key) {
    if (!entry.contains(key)) return kInf;
    const auto& v = entry.at(key);
    if (!v.is_number()) throw Error(std::string("tolerance '") + key + "' is not a number");
    return v.get<double>();
}

ConstancyInput constancy_input(const ExperimentConfig& config, const Model& model, std::size_t threads,
                               const ConstancyTolerances& tolerances) {
    ConstancyInput in;
    in.hull_name = model.hull.name;
    in.hull = &model.hull.subshift;
    in.configurations = model.configurations;
    in.windows = model.windows;
    in.boundary = config.boundary;
    in.persistence = config.persistence;
    if (config.grid) {
        const auto& g = *config.grid;
        in.grid = GridSpec{make_window(model.hull.group, g.window),
                           Rectangle{g.re_min, g.re_max, g.im_min, g.im_max},
                           Resolution{g.n_re, g.n_im},
                           g.cutoff,
                           config.epsilons};
    }
    in.tolerances = tolerances;
    if (config.certification)
        in.certification = CertificationLevel{config.certification->n, config.certification->big_n,
                                              config.certification->radius};
    in.threads = threads;
    return in;
}

std::vector<std::vector<Complex>> window_column(const ConstancyReport& report, std::size_t w) {
    std::vector<std::vector<Complex>> sets;
    for (const auto& per_config : report.spectra) sets.push_back(per_config[w]);
    return sets;
}

std::vector<std::string> config_labels(const Model& model) {
    std::vector<std::string> labels;
    for (const auto& omega : model.configurations) labels.push_back(omega.describe());
    return labels;
}

// ---- scenarios -------------------------------------------------------------

void run_spectrum(Context& ctx) {
    const Model model = build_model(ctx.config);
    const auto tol = resolve_tolerances(ctx.config);
    if (model.windows.empty()) throw DomainError("spectrum needs at least one [[window]]");
    Json summary = Json::array();
    for (std::size_t w = 0; w < model.windows.size(); ++w) {
        std::vector<std::vector<Complex>> sets;
        for (std::size_t c = 0; c < model.configurations.size(); ++c) {
            const auto& omega = model.configurations[c];
            const FiniteSection sec = section(model.scheme, omega, model.windows[w], ctx.config.boundary);
            const SpectrumSample sample = eigenvalues(sec);
            write_spectrum_csv(ctx.path("spectrum_" + tag(c, w) + ".csv"), sample.points);
            ctx.artifact("spectrum_" + tag(c, w) + ".csv");
            write_section_csv(ctx.path("section_" + tag(c, w) + ".csv"), sec);
            ctx.artifact("section_" + tag(c, w) + ".csv");
            write_section_binary(ctx.path("section_" + tag(c, w) + ".fsec"), sec);
            ctx.artifact("section_" + tag(c, w) + ".fsec");

            std::vector<Complex> probe;
            const std::size_t n = sample.points.size();
            const std::size_t take = std::min(n, kResidualSamples);
            for (std::size_t k = 0; k < take; ++k) probe.push_back(sample.points[take > 1 ? k * (n - 1) / (take - 1) : 0]);
            const double residual = max_eigen_residual(sec.matrix, probe);
            if (!(residual <= kResidualThreshold))
                ctx.fail(kExitAssertion, "eigenvalue residual " + format_double(residual) + " exceeds " +
                                             format_double(kResidualThreshold) + " for " + tag(c, w));

            Json item{{"configuration", c},
                      {"window", to_json(model.windows[w])},
                      {"size", n},
                      {"max_sampled_residual", residual},
                      {"backward_error_bound", backward_error_bound(sec.matrix)}};
            if (ctx.config.floquet_theta > 0 && omega.periods() && omega.group().is_lattice() &&
                omega.group().rank() == 1) {
                const SpectrumSample oracle = floquet_oracle(model.scheme, omega, ctx.config.floquet_theta);
                const std::string name = "floquet_" + tag(c, w) + ".csv";
                write_spectrum_csv(ctx.path(name), oracle.points);
                ctx.artifact(name);
                const double d = directed_distance(sample.points, oracle.points);
                item["floquet_directed_distance"] = d;
                if (!(d <= tol.floquet))
                    ctx.fail(kExitAssertion, "section spectrum leaves the Floquet oracle by " + format_double(d) +
                                                 " for " + tag(c, w));
            }
            summary.push_back(item);
            sets.push_back(sample.points);
        }
        if (ctx.svg) {
            const std::string name = "spectrum_w" + std::to_string(w) + ".svg";
            write_text(ctx.path(name), spectra_svg(sets, config_labels(model)));
            ctx.artifact(name);
        }
    }
    write_json(ctx.path("spectrum.json"), summary);
    ctx.artifact("spectrum.json");
}

void run_pseudospectrum(Context& ctx) {
    if (!ctx.config.grid) throw DomainError("pseudospectrum needs a [grid]");
    const Model model = build_model(ctx.config);
    const auto& g = *ctx.config.grid;
    const Window window = make_window(model.hull.group, g.window);
    Json summary = Json::array();
    for (std::size_t c = 0; c < model.configurations.size(); ++c) {
        const PseudospectrumGrid grid =
            pseudospectrum_grid(model.scheme, model.configurations[c], window, ctx.config.boundary,
                                Rectangle{g.re_min, g.re_max, g.im_min, g.im_max}, Resolution{g.n_re, g.n_im},
                                ctx.threads);
        const std::string name = "grid_c" + std::to_string(c) + ".csv";
        write_grid_csv(ctx.path(name), grid);
        ctx.artifact(name);
        if (ctx.svg) {
            const std::string svg = "grid_c" + std::to_string(c) + ".svg";
            write_text(ctx.path(svg), heatmap_svg(grid, ctx.config.epsilons));
            ctx.artifact(svg);
        }
        Json counts = Json::object();
        for (double eps : ctx.config.epsilons) counts[format_double(eps)] = sublevel_count(grid, eps);
        std::size_t clamped = 0;
        for (double s : grid.sigma_min) clamped += resolvent_norm(s).clamped ? 1 : 0;
        const auto lowest = std::min_element(grid.sigma_min.begin(), grid.sigma_min.end());
        const std::size_t k = static_cast<std::size_t>(lowest - grid.sigma_min.begin());
        const auto z = grid.node(k % g.n_re, k / g.n_re);
        summary.push_back({{"configuration", c},
                           {"min_sigma", *lowest},
                           {"argmin", {z.real(), z.imag()}},
                           {"sublevel_counts", counts},
                           {"clamped_resolvent_nodes", clamped}});
    }
    write_json(ctx.path("pseudospectrum.json"), summary);
    ctx.artifact("pseudospectrum.json");
}

void run_constancy(Context& ctx) {
    const Model model = build_model(ctx.config);
    const auto tol = resolve_tolerances(ctx.config);
    const ConstancyReport report = constancy_report(
        model.scheme,
        constancy_input(ctx.config, model, ctx.threads, ConstancyTolerances{tol.hausdorff, tol.grid, tol.area_fraction}));
    for (std::size_t c = 0; c < report.spectra.size(); ++c)
        for (std::size_t w = 0; w < report.spectra[c].size(); ++w) {
            const std::string name = "spectrum_" + tag(c, w) + ".csv";
            write_spectrum_csv(ctx.path(name), report.spectra[c][w]);
            ctx.artifact(name);
        }
    for (std::size_t c = 0; c < report.grids.size(); ++c) {
        const std::string name = "grid_c" + std::to_string(c) + ".csv";
        write_grid_csv(ctx.path(name), report.grids[c]);
        ctx.artifact(name);
        if (ctx.svg) {
            const std::string svg = "grid_c" + std::to_string(c) + ".svg";
            write_text(ctx.path(svg), heatmap_svg(report.grids[c], ctx.config.epsilons));
            ctx.artifact(svg);
        }
    }
    if (ctx.svg)
        for (std::size_t w = 0; w < model.windows.size(); ++w) {
            const std::string svg = "spectrum_w" + std::to_string(w) + ".svg";
            write_text(ctx.path(svg), spectra_svg(window_column(report, w), config_labels(model)));
            ctx.artifact(svg);
        }
    Json j = to_json(report);
    j["echo"] = serialize_config(ctx.config);
    write_json(ctx.path("constancy_report.json"), j);
    ctx.artifact("constancy_report.json");
    if (!report.hypothesis_verified) ctx.note(report.hypothesis);
    if (!report.monotone) ctx.fail(kExitAssertion, "distances increase along the window schedule");
    if (!report.within_tolerance) ctx.fail(kExitAssertion, "final distances exceed the tolerances");
}

void run_limitops(Context& ctx) {
    const Model model = build_model(ctx.config);
    const auto& scheme = model.scheme;
    const std::size_t m = ctx.config.limits.m;
    const std::size_t observation = scheme.locality_radius() + scheme.propagation() + m;
    Json out = Json::array();
    std::size_t stabilized = 0;
    for (std::size_t c = 0; c < model.configurations.size(); ++c) {
        const auto& omega = model.configurations[c];
        const auto sequences = build_sequences(ctx.config, model, omega, observation);
        for (std::size_t k = 0; k < sequences.size(); ++k) {
            const auto probe = approximate_limit_operator(scheme, omega, sequences[k], m, ctx.config.limits.agree);
            Json j = to_json(probe, model.hull.alphabet);
            j["configuration"] = c;
            if (probe.stabilized) {
                ++stabilized;
                const double norm = largest_singular_value(probe.limit_section->matrix);
                const double bound = *std::max_element(probe.translated_norms.begin(), probe.translated_norms.end());
                j["limit_norm"] = norm;
                j["norm_dominated"] = norm <= bound + kNormSlack;
                if (!(norm <= bound + kNormSlack))
                    ctx.fail(kExitAssertion, "limit section norm " + format_double(norm) + " exceeds translates' " +
                                                 format_double(bound));
                const std::string name = "probe_c" + std::to_string(c) + "_p" + std::to_string(k) + ".csv";
                write_spectrum_csv(ctx.path(name), eigenvalues(probe.limit_section->matrix));
                ctx.artifact(name);
            }
            out.push_back(j);
        }
    }
    write_json(ctx.path("limitops.json"), out);
    ctx.artifact("limitops.json");
    if (stabilized == 0) ctx.fail(kExitInconclusive, "no probe stabilized");
}

void run_dynsys(Context& ctx) {
    if (!ctx.config.certification) throw DomainError("dynsys-check needs a [certification] table");
    const auto& level = *ctx.config.certification;
    const Model model = build_model(ctx.config);
    const Alphabet& alphabet = model.hull.alphabet;
    Json out;
    out["hull"] = hull_json(model.hull);
    if (level.big_n > level.n) {
        const auto cert = certify_minimal(model.hull.subshift, level.n, level.big_n);
        out["minimality"] = to_json(cert, alphabet);
        if (cert.certified != level.expect_minimal)
            ctx.fail(kExitAssertion, std::string("minimality ") + (cert.certified ? "certified" : "refuted") +
                                         ", expected the opposite");
    }
    Json pe = Json::array();
    for (std::size_t c = 0; c < model.configurations.size(); ++c) {
        const auto cert = certify_pseudoergodic(model.configurations[c], model.hull.subshift, level.n, level.radius);
        Json j = to_json(cert, alphabet);
        j["configuration"] = to_json(ctx.config.configurations.empty() ? ConfigurationSpec{}
                                                                        : ctx.config.configurations[c]);
        pe.push_back(j);
        if (!level.expect_minimal) continue;
        if (cert.status == SearchStatus::refuted)
            ctx.fail(kExitAssertion, "configuration " + std::to_string(c) + " is not pseudoergodic");
        else if (cert.status == SearchStatus::inconclusive)
            ctx.fail(kExitInconclusive, "pseudoergodicity of configuration " + std::to_string(c) +
                                            " inconclusive within radius " + std::to_string(level.radius));
    }
    out["pseudoergodicity"] = pe;

    if (!ctx.config.sequences.empty()) {
        const Window window = Window::ball(model.hull.group, ctx.config.limits.m);
        Json samples = Json::array();
        for (const auto& omega : model.configurations) {
            const auto seqs = build_sequences(ctx.config, model, omega, ctx.config.limits.m);
            const LimitSetSample sample = sample_limit_set(omega, window, seqs, ctx.config.limits.agree);
            Json j = to_json(sample, alphabet);
            std::set<Pattern> from_directions;
            for (const auto& p : sample.probes)
                if (p.stabilized && p.direction)
                    for (const auto& q : sample.directional(*p.direction)) from_directions.insert(q);
            const auto all = sample.patterns();
            const bool union_ok = std::equal(all.begin(), all.end(), from_directions.begin(), from_directions.end());
            j["directional_union_matches"] = union_ok;
            if (!union_ok) ctx.fail(kExitAssertion, "directional limit sets do not cover the sampled limit set");
            samples.push_back(j);
        }
        out["limit_sets"] = samples;
    }
    write_json(ctx.path("certificate.json"), out);
    ctx.artifact("certificate.json");
}

void run_inclusion(Context& ctx) {
    const Model model = build_model(ctx.config);
    if (model.windows.empty()) throw DomainError("inclusion needs a [[window]] for A(omega)");
    const auto tol = resolve_tolerances(ctx.config);
    const auto& scheme = model.scheme;
    const std::size_t m = ctx.config.limits.m;
    const std::size_t observation = scheme.locality_radius() + scheme.propagation() + m;
    Json out = Json::array();
    for (std::size_t c = 0; c < model.configurations.size(); ++c) {
        const auto& omega = model.configurations[c];
        std::vector<LimitOperatorProbe> probes;
        for (const auto& seq : build_sequences(ctx.config, model, omega, observation)) {
            auto probe = approximate_limit_operator(scheme, omega, seq, m, ctx.config.limits.agree);
            if (probe.stabilized) probes.push_back(std::move(probe));
        }
        if (probes.empty()) {
            ctx.fail(kExitInconclusive, "no stabilized probe for configuration " + std::to_string(c));
            continue;
        }
        const InclusionReport report =
            inclusion_check(scheme, omega, probes, model.windows.back(), ctx.config.boundary, tol.inclusion);
        Json j = to_json(report);
        j["configuration"] = c;
        out.push_back(j);
        if (!report.all_consistent)
            ctx.fail(kExitAssertion, "probe spectrum outside tolerance for configuration " + std::to_string(c));
    }
    write_json(ctx.path("inclusion.json"), out);
    ctx.artifact("inclusion.json");
}

// ---- calibration -----------------------------------------------------------

Json calibrate_floquet() {
    double worst = 0.0;
    Json per_q = Json::object();
    for (std::size_t q = 1; q <= 3; ++q) {
        const auto cfg = floquet_config(q);
        const Model model = build_model(cfg);
        const auto& omega = model.configurations.front();
        const auto points = eigenvalues(section(model.scheme, omega, model.windows.front(), cfg.boundary).matrix);
        const double d = hausdorff_distance(points, floquet_oracle(model.scheme, omega, cfg.floquet_theta).points);
        per_q[std::to_string(q)] = d;
        worst = std::max(worst, d);
    }
    return {{"measured", per_q}, {"floquet", kCalibrationFactor * std::max(worst, kEigenResidualScale)}};
}

ConstancyReport uncalibrated_report(const ExperimentConfig& cfg, const Model& model, std::size_t threads) {
    return constancy_report(model.scheme, constancy_input(cfg, model, threads, ConstancyTolerances{}));
}

double final_hausdorff(const ConstancyReport& report) {
    double worst = 0.0;
    for (const auto& p : report.pairs) worst = std::max(worst, p.hausdorff.back());
    return worst;
}

void run_calibrate(Context& ctx) {
    Json entries = Json::object();
    entries["floquet"] = calibrate_floquet();

    for (const auto& [key, cfg] : {std::pair{"fibonacci_constancy", fibonacci_constancy_config()},
                                   std::pair{"period2_constancy", period2_constancy_config()}}) {
        const Model model = build_model(cfg);
        const ConstancyReport report = uncalibrated_report(cfg, model, ctx.threads);
        Json schedule = Json::array();
        for (const auto& p : report.pairs) schedule.push_back(p.hausdorff);
        if (!report.monotone) ctx.fail(kExitAssertion, std::string(key) + ": distances increase with window size");
        const double measured = final_hausdorff(report);
        entries[key] = {{"measured_schedule", schedule}, {"measured", measured}, {"hausdorff", calibrated(measured)}};
    }

    for (const auto& [key, cfg] : {std::pair{"feinberg_zee_grid", feinberg_zee_grid_config()},
                                   std::pair{"identity_grid", identity_grid_config()}}) {
        const Model model = build_model(cfg);
        const ConstancyReport report = uncalibrated_report(cfg, model, ctx.threads);
        double grid = 0.0;
        double area = 0.0;
        for (const auto& p : report.pairs) {
            grid = std::max(grid, *p.grid_deviation);
            for (double a : p.area_differences) area = std::max(area, a);
        }
        entries[key] = {{"measured_grid", grid},
                        {"measured_area_fraction", area},
                        {"hypothesis", report.hypothesis},
                        {"grid", calibrated(grid)},
                        {"area_fraction", calibrated(area)}};
    }

    {
        const auto cfg = fibonacci_inclusion_config();
        const Model model = build_model(cfg);
        const auto& omega = model.configurations.front();
        const auto& scheme = model.scheme;
        const std::size_t observation = scheme.locality_radius() + scheme.propagation() + cfg.limits.m;
        std::vector<LimitOperatorProbe> probes;
        for (const auto& seq : build_sequences(cfg, model, omega, observation)) {
            auto probe = approximate_limit_operator(scheme, omega, seq, cfg.limits.m, cfg.limits.agree);
            if (probe.stabilized) probes.push_back(std::move(probe));
        }
        const auto report = inclusion_check(scheme, omega, probes, model.windows.back(), cfg.boundary, kInf);
        double worst = 0.0;
        for (const auto& e : report.entries) worst = std::max(worst, e.distance);
        entries["fibonacci_inclusion"] = {
            {"probes", probes.size()}, {"measured", worst}, {"inclusion", calibrated(worst)}};
    }

    const Json file{{"version", 1},
                    {"factor", kCalibrationFactor},
                    {"floor", kCalibrationFloor},
                    {"entries", entries}};
    const std::string target = ctx.config.tolerance_file.empty() ? ctx.path("tolerances.json")
                                                                 : ctx.config.tolerance_file;
    if (ctx.result.exit_code != kExitPass) {
        ctx.note("calibration diverged; tolerance file not written");
        write_json(ctx.path("calibration_failed.json"), file);
        ctx.artifact("calibration_failed.json");
        return;
    }
    write_json(target, file);
    if (target == ctx.path("tolerances.json")) {
        ctx.artifact("tolerances.json");
    } else {
        write_json(ctx.path("tolerances.json"), file);
        ctx.artifact("tolerances.json");
        ctx.note("tolerances written to " + target);
    }
}

// ---- canonical configurations ----------------------------------------------

WindowSpec box1(std::int64_t lo, std::int64_t hi) { return WindowSpec{std::nullopt, {lo}, {hi}}; }

ConfigurationSpec shifted_reference(std::int64_t s) { return ConfigurationSpec{"reference", {}, {}, {s}}; }

ConfigurationSpec explicit_seed(std::uint64_t seed) { return ConfigurationSpec{"explicit", seed, {}, {}}; }

} // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{"spectrum", "pseudospectrum", "constancy", "limitops",
                                                "dynsys-check", "inclusion", "calibrate"};
    return names;
}

std::string tolerance_path(const ExperimentConfig& config) {
    if (const char* env = std::getenv("HULLSPEC_TOLERANCES"); env && *env) return env;
    if (!config.tolerance_file.empty()) return config.tolerance_file;
    return "data/tolerances.json";
}

Json load_tolerances(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read tolerance file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw Error("tolerance file '" + path + "': " + e.what());
    }
}

ResolvedTolerances resolve_tolerances(const ExperimentConfig& config) {
    ResolvedTolerances t{kInf, kInf, kInf, kInf, kInf};
    if (!config.tolerance_key.empty()) {
        const std::string path = tolerance_path(config);
        const Json file = load_tolerances(path);
        if (!file.contains("entries") || !file["entries"].contains(config.tolerance_key))
            throw Error("tolerance file '" + path + "' has no entry '" + config.tolerance_key + "'");
        const Json& e = file["entries"][config.tolerance_key];
        t = {entry_value(e, "hausdorff"), entry_value(e, "grid"), entry_value(e, "area_fraction"),
             entry_value(e, "inclusion"), entry_value(e, "floquet")};
    }
    const auto& o = config.tolerances;
    if (o.hausdorff) t.hausdorff = *o.hausdorff;
    if (o.grid) t.grid = *o.grid;
    if (o.area_fraction) t.area_fraction = *o.area_fraction;
    if (o.inclusion) t.inclusion = *o.inclusion;
    if (o.floquet) t.floquet = *o.floquet;
    return t;
}

Model build_model(const ExperimentConfig& config) {
    Hull hull = make_hull(config.hull.name, hull_params(config));
    CoefficientScheme scheme = make_scheme(config.scheme.name, hull.group, hull.alphabet, config.scheme.block_dim);
    std::vector<Configuration> configurations;
    if (config.configurations.empty()) {
        configurations.push_back(hull.reference);
    } else {
        for (const auto& spec : config.configurations) configurations.push_back(realize(hull, spec));
    }
    std::vector<Window> windows;
    for (const auto& w : config.windows) windows.push_back(make_window(hull.group, w));
    return Model{std::move(hull), std::move(scheme), std::move(configurations), std::move(windows)};
}

std::vector<EscapeSequence> build_sequences(const ExperimentConfig& config, const Model& model,
                                            const Configuration& omega, std::size_t observation_radius) {
    std::vector<EscapeSequence> out;
    const GroupSpec& group = model.hull.group;
    for (const auto& s : config.sequences) {
        if (s.kind == "arithmetic") {
            const GroupElement start = s.start.empty() ? group.identity() : element_from(group, s.start);
            out.push_back(arithmetic_sequence(start, element_from(group, s.step), s.count, s.direction));
            continue;
        }
        const Window window = Window::ball(group, observation_radius);
        auto patterns = model.hull.subshift.legal_patterns(window);
        if (s.max_patterns > 0 && patterns.size() > s.max_patterns) patterns.erase(patterns.begin() + static_cast<std::ptrdiff_t>(s.max_patterns), patterns.end());
        for (const auto& p : patterns) {
            EscapeSequence seq = occurrence_sequence(omega, p, s.count, s.min_length, s.search_radius);
            if (seq.terms.size() < s.count)
                throw RadiusExceeded(s.search_radius,
                                     "pattern " + p.to_string(model.hull.alphabet) + " found only " +
                                         std::to_string(seq.terms.size()) + " times");
            seq.direction = s.direction;
            out.push_back(std::move(seq));
        }
    }
    return out;
}

ExperimentConfig floquet_config(std::size_t q) {
    ExperimentConfig c;
    c.scheme.name = "period_q_jacobi";
    c.hull = HullConfig{"period_q", "lattice", 1, q};
    c.configurations = {shifted_reference(0)};
    c.windows = {box1(0, static_cast<std::int64_t>(6 * q) - 1)};
    c.boundary = Boundary::periodic;
    c.floquet_theta = 6;
    c.tolerance_key = "floquet";
    c.output_dir = "out/floquet_q" + std::to_string(q);
    return c;
}

ExperimentConfig fibonacci_constancy_config() {
    ExperimentConfig c;
    c.scheme = SchemeConfig{"fibonacci_jacobi", 1, std::vector<double>{0.0, 1.0}};
    c.hull = HullConfig{"fibonacci", "lattice", 1, 2};
    for (std::int64_t s : {0, 1000, -1234, 500, 2000}) c.configurations.push_back(shifted_reference(s));
    c.windows = {box1(-44, 44), box1(-116, 116), box1(-305, 304)};
    c.boundary = Boundary::truncate;
    c.persistence = PersistenceOptions{true, {1, 2, 3}, 2.0};
    c.certification = CertificationConfig{6, 200, 500, true};
    c.tolerance_key = "fibonacci_constancy";
    c.output_dir = "out/fibonacci_constancy";
    return c;
}

ExperimentConfig feinberg_zee_grid_config() {
    ExperimentConfig c;
    c.scheme.name = "feinberg_zee";
    c.hull = HullConfig{"full_pm1", "lattice", 1, 2};
    c.configurations = {explicit_seed(1), explicit_seed(2)};
    c.boundary = Boundary::truncate;
    c.grid = GridConfig{-2.5, 2.5, -2.5, 2.5, 100, 100, 0.05, box1(-200, 199)};
    c.epsilons = {0.5, 0.2};
    c.persistence.enabled = false;
    c.certification = CertificationConfig{3, 0, 200, true};
    c.tolerance_key = "feinberg_zee_grid";
    c.output_dir = "out/feinberg_zee_grid";
    return c;
}

ExperimentConfig fibonacci_inclusion_config() {
    ExperimentConfig c;
    c.scheme = SchemeConfig{"fibonacci_jacobi", 1, std::vector<double>{0.0, 1.0}};
    c.hull = HullConfig{"fibonacci", "lattice", 1, 2};
    c.configurations = {shifted_reference(0)};
    c.windows = {box1(-116, 116)};
    c.boundary = Boundary::truncate;
    c.limits = LimitsConfig{8, 3};
    SequenceConfig s;
    s.kind = "occurrence";
    s.count = 4;
    s.min_length = 100;
    s.search_radius = 5000;
    s.max_patterns = 20;
    c.sequences = {s};
    c.tolerance_key = "fibonacci_inclusion";
    c.output_dir = "out/fibonacci_inclusion";
    return c;
}

ExperimentConfig period2_constancy_config() {
    ExperimentConfig c;
    c.scheme.name = "period_q_jacobi";
    c.hull = HullConfig{"period_q", "lattice", 1, 2};
    c.configurations = {shifted_reference(0), shifted_reference(1)};
    c.windows = {box1(0, 9), box1(0, 19), box1(0, 39)};
    c.boundary = Boundary::periodic;
    c.persistence.enabled = false;
    c.tolerance_key = "period2_constancy";
    c.output_dir = "out/period2_constancy";
    return c;
}

ExperimentConfig identity_grid_config() {
    ExperimentConfig c;
    c.scheme.name = "identity";
    c.hull = HullConfig{"full_pm1", "lattice", 1, 2};
    c.configurations = {explicit_seed(1), explicit_seed(2)};
    c.boundary = Boundary::truncate;
    c.grid = GridConfig{0.0, 2.0, -1.0, 1.0, 51, 51, 0.05, box1(0, 19)};
    c.epsilons = {0.5, 0.2};
    c.persistence.enabled = false;
    c.tolerance_key = "identity_grid";
    c.output_dir = "out/identity_grid";
    return c;
}

RunResult run_scenario(const std::string& name, const ExperimentConfig& config, const RunOptions& options) {
    if (std::find(scenario_names().begin(), scenario_names().end(), name) == scenario_names().end())
        throw DomainError("unknown scenario '" + name + "'");
    const auto started = std::chrono::steady_clock::now();
    Context ctx{config, options.out_dir.empty() ? fs::path(config.output_dir) : fs::path(options.out_dir),
                options.threads == 0 ? std::max<std::size_t>(1, config.threads) : options.threads, options.svg, {}};
    fs::create_directories(ctx.out);

    if (name == "spectrum") run_spectrum(ctx);
    else if (name == "pseudospectrum") run_pseudospectrum(ctx);
    else if (name == "constancy") run_constancy(ctx);
    else if (name == "limitops") run_limitops(ctx);
    else if (name == "dynsys-check") run_dynsys(ctx);
    else if (name == "inclusion") run_inclusion(ctx);
    else run_calibrate(ctx);

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    Json manifest;
    manifest["tool"] = "hullspec";
    manifest["version"] = kVersion;
    manifest["scenario"] = name;
    manifest["config_path"] = options.config_path;
    manifest["config"] = serialize_config(config);
    manifest["threads"] = ctx.threads;
    manifest["svg"] = ctx.svg;
    if (!config.tolerance_key.empty() && name != "calibrate") {
        const std::string path = tolerance_path(config);
        manifest["tolerances"] = {{"path", path}, {"key", config.tolerance_key},
                                  {"entry", load_tolerances(path)["entries"][config.tolerance_key]}};
    }
    Json artifacts = Json::array();
    for (const auto& a : ctx.result.artifacts) {
        std::error_code ec;
        const auto bytes = fs::file_size(ctx.out / a, ec);
        artifacts.push_back({{"name", a}, {"bytes", ec ? 0 : bytes}});
    }
    manifest["artifacts"] = artifacts;
    manifest["messages"] = ctx.result.messages;
    manifest["exit_code"] = ctx.result.exit_code;
    manifest["wall_time_seconds"] = seconds;
    write_json((ctx.out / "manifest.json").string(), manifest);
    return ctx.result;
}

} // namespace hullspec
