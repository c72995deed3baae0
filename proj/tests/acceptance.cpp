// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hullspec/catalog.hpp"
#include "hullspec/certify.hpp"
#include "hullspec/experiment.hpp"
#include "hullspec/hausdorff.hpp"
#include "hullspec/limit_operator.hpp"
#include "hullspec/limit_set.hpp"
#include "hullspec/linalg.hpp"
#include "hullspec/spectrum.hpp"

using namespace hullspec;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kFloquetTolerance = 1e-8;
constexpr double kNormalityTolerance = 1e-8;
constexpr double kNormSlack = 1e-10;
constexpr double kAreaFractionCap = 0.02;
constexpr double kEquivarianceSeconds = 10;
constexpr double kFloquetSeconds = 5;
constexpr double kMinimalitySeconds = 10;
constexpr double kFibonacciSeconds = 120;
constexpr double kGridSeconds = 300;
constexpr double kDirectionalSeconds = 10;

const fs::path kSource = HULLSPEC_SOURCE_DIR;

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path out_dir(const std::string& name) {
    const fs::path p = fs::current_path() / "acceptance_out" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

ExperimentConfig with_tolerances(ExperimentConfig c) {
    c.tolerance_file = (kSource / "data" / "tolerances.json").string();
    return c;
}

struct ScenarioRun {
    RunResult result;
    fs::path dir;
    double seconds = 0;
};

ScenarioRun run(const std::string& scenario, const ExperimentConfig& c, const std::string& tag, std::size_t threads) {
    ScenarioRun r;
    r.dir = out_dir(tag);
    Stopwatch sw;
    r.result = run_scenario(scenario, with_tolerances(c), RunOptions{r.dir.string(), threads, false, ""});
    r.seconds = sw.seconds();
    return r;
}

Json read_json(const fs::path& p) { return Json::parse(read_file(p)); }

// ---- 1 ---------------------------------------------------------------------

Outcome equivariance() {
    Stopwatch sw;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> u(-40, 40);
    const std::vector<std::string> schemes{"free_laplacian", "fibonacci_jacobi", "period_q_jacobi", "feinberg_zee",
                                           "heisenberg_adjacency"};
    std::size_t checks = 0, failures = 0;
    for (const GroupSpec& group : {GroupSpec::lattice(1), GroupSpec::lattice(2), GroupSpec::heisenberg()}) {
        const Hull hull = make_hull("full_pm1", HullParams{2, group.rank(), !group.is_lattice(), {}});
        const Window ball = Window::ball(group, 6);
        for (const auto& name : schemes) {
            const CoefficientScheme scheme = make_scheme(name, group, hull.alphabet);
            for (int t = 0; t < 50; ++t) {
                GroupElement g;
                if (group.is_lattice()) {
                    std::vector<std::int64_t> c(group.rank());
                    for (auto& x : c) x = u(rng);
                    g = GroupElement::lattice(c);
                } else {
                    g = GroupElement::heisenberg(u(rng), u(rng), u(rng));
                }
                const Configuration omega = Configuration::explicit_random(group, hull.alphabet, rng());
                ++checks;
                if (!verify_equivariance(scheme, omega, g, ball)) ++failures;
            }
        }
    }
    const double s = sw.seconds();
    return {failures == 0 && s < kEquivarianceSeconds,
            std::to_string(checks) + " checks, " + std::to_string(failures) + " failures, " + fmt(s) + " s"};
}

// ---- 2 ---------------------------------------------------------------------

Outcome floquet() {
    Stopwatch sw;
    double worst = 0.0;
    for (std::size_t q = 1; q <= 3; ++q) {
        const ExperimentConfig cfg = floquet_config(q);
        const Model model = build_model(cfg);
        const auto& omega = model.configurations.front();
        // Section of size 6q under the periodic boundary.
        const Window w = Window::interval(model.hull.group, 0, 6 * q);
        const auto ev = eigenvalues(section(model.scheme, omega, w, Boundary::periodic).matrix);
        const auto oracle = floquet_oracle(model.scheme, omega, 6).points;
        worst = std::max(worst, hausdorff_distance(ev, oracle));
    }
    const double s = sw.seconds();
    return {worst <= kFloquetTolerance && s < kFloquetSeconds,
            "max Hausdorff " + fmt(worst) + " (<= " + fmt(kFloquetTolerance) + "), " + fmt(s) + " s"};
}

// ---- 3 ---------------------------------------------------------------------

Outcome minimality_chain() {
    Stopwatch sw;
    const Hull fib = make_hull("fibonacci");
    const auto cert = certify_minimal(fib.subshift, 6, 200);
    const bool primitive = cert.primitivity && cert.primitivity->matrix == IncidenceMatrix{{2, 1}, {1, 1}};
    std::size_t pe = 0;
    const Model model = build_model(fibonacci_constancy_config());
    for (const auto& omega : model.configurations)
        if (certify_pseudoergodic(omega, fib.subshift, 6, 500).status == SearchStatus::certified) ++pe;

    const Hull full = make_hull("full_pm1");
    const auto refuted = certify_minimal(full.subshift, 1, 3);
    bool constant_witness = false;
    if (!refuted.certified && refuted.witness) {
        const auto& l = refuted.witness->letters;
        constant_witness = std::all_of(l.begin(), l.end(), [&](Letter a) { return a == l.front(); });
    }
    const double s = sw.seconds();
    const bool pass = cert.certified && primitive && pe == model.configurations.size() && !refuted.certified &&
                      constant_witness && s < kMinimalitySeconds;
    return {pass, std::string("fibonacci minimal ") + (cert.certified ? "yes" : "no") + ", primitive witness " +
                      (primitive ? "[[2,1],[1,1]]" : "missing") + ", pseudoergodic " + std::to_string(pe) + "/" +
                      std::to_string(model.configurations.size()) + ", full shift refuted " +
                      (!refuted.certified && constant_witness ? "by constant pattern" : "NO") + ", " + fmt(s) + " s"};
}

// ---- 4 and 5 ----------------------------------------------------------------

struct ConstancyOutcome {
    Outcome outcome;
    ScenarioRun run;
};

ConstancyOutcome fibonacci_constancy(std::size_t threads) {
    ScenarioRun r = run("constancy", fibonacci_constancy_config(), "fibonacci_t" + std::to_string(threads), threads);
    const Json report = read_json(r.dir / "constancy_report.json");
    double final_worst = 0.0;
    for (const auto& p : report["pairs"]) final_worst = std::max(final_worst, p["hausdorff"].back().get<double>());
    const double tol = report["tolerances"]["hausdorff"].get<double>();
    const bool pass = r.result.exit_code == kExitPass && report["monotone"] == true &&
                      report["within_tolerance"] == true && r.seconds < kFibonacciSeconds;
    return {{pass, std::string("monotone ") + (report["monotone"] == true ? "yes" : "no") + ", final max distance " +
                       fmt(final_worst) + " (tolerance " + fmt(tol) + "), " + fmt(r.seconds) + " s"},
            r};
}

ConstancyOutcome feinberg_zee(std::size_t threads) {
    ScenarioRun r = run("constancy", feinberg_zee_grid_config(), "feinberg_zee_t" + std::to_string(threads), threads);
    const Json report = read_json(r.dir / "constancy_report.json");
    const auto& pair = report["pairs"][0];
    const double deviation = pair["grid_deviation"].get<double>();
    double area = 0.0;
    for (const auto& a : pair["area_differences"]) area = std::max(area, a.get<double>());
    const double tol_grid = report["tolerances"]["grid"].get<double>();
    const double tol_area = report["tolerances"]["area_fraction"].get<double>();
    const bool certified = report["hypothesis_verified"] == true;
    const bool pass = r.result.exit_code == kExitPass && certified && deviation <= tol_grid &&
                      area <= std::min(tol_area, kAreaFractionCap) && r.seconds < kGridSeconds;
    return {{pass, std::string("3-pseudoergodic ") + (certified ? "yes" : "no") + ", grid deviation " + fmt(deviation) +
                       " (tolerance " + fmt(tol_grid) + "), area difference " + fmt(area) + " (tolerance " +
                       fmt(std::min(tol_area, kAreaFractionCap)) + "), " + fmt(r.seconds) + " s"},
            r};
}

// ---- 6 ---------------------------------------------------------------------

Outcome norm_dominance() {
    std::size_t probes = 0, violations = 0;
    double worst_margin = -1e300;
    const auto check = [&](const ExperimentConfig& base, std::size_t m, SequenceConfig seq) {
        ExperimentConfig cfg = base;
        cfg.limits.m = m;
        cfg.sequences = {seq};
        const Model model = build_model(cfg);
        const std::size_t observation = model.scheme.locality_radius() + model.scheme.propagation() + m;
        for (const auto& omega : model.configurations) {
            for (const auto& p : operator_spectrum_sample(model.scheme, omega,
                                                          build_sequences(cfg, model, omega, observation), m)) {
                ++probes;
                const double norm = largest_singular_value(p.limit_section->matrix);
                const double bound = *std::max_element(p.translated_norms.begin(), p.translated_norms.end());
                worst_margin = std::max(worst_margin, norm - bound);
                if (!(norm <= bound + kNormSlack)) ++violations;
            }
        }
    };
    SequenceConfig fib_seq{"occurrence", {}, {}, 4, std::nullopt, 100, 5000, 20};
    check(fibonacci_constancy_config(), 8, fib_seq);
    SequenceConfig fz_seq{"occurrence", {}, {}, 4, std::nullopt, 50, 20000, 16};
    check(feinberg_zee_grid_config(), 3, fz_seq);
    return {probes > 0 && violations == 0, std::to_string(probes) + " stabilized probes, " +
                                                std::to_string(violations) + " violations, max(norm - bound) " +
                                                fmt(worst_margin)};
}

// ---- 7 ---------------------------------------------------------------------

Outcome inclusion() {
    const ScenarioRun r = run("inclusion", fibonacci_inclusion_config(), "inclusion", 1);
    const Json rep = read_json(r.dir / "inclusion.json");
    const auto& entries = rep[0]["entries"];
    std::size_t consistent = 0;
    double worst = 0.0;
    for (const auto& e : entries) {
        consistent += e["consistent"] == true ? 1 : 0;
        worst = std::max(worst, e["distance"].get<double>());
    }
    const double tol = rep[0]["tolerance"].get<double>();

    // Periodic hull: probes along period multiples against the matching window.
    const Hull per = make_hull("period_q", HullParams{3, 1, false, {}});
    const CoefficientScheme scheme = make_scheme("period_q_jacobi", per.group, per.alphabet);
    const std::size_t m = 8;
    std::vector<LimitOperatorProbe> probes;
    for (std::int64_t sign : {1, -1})
        probes.push_back(approximate_limit_operator(
            scheme, per.reference, arithmetic_sequence(per.group.identity(), GroupElement::lattice({sign * 30}), 6), m));
    const auto periodic = inclusion_check(scheme, per.reference, probes, Window::ball(per.group, m), Boundary::truncate, 0.0);
    double periodic_worst = 0.0;
    for (const auto& e : periodic.entries) periodic_worst = std::max(periodic_worst, e.distance);

    const bool pass = r.result.exit_code == kExitPass && entries.size() == 20 && consistent == 20 &&
                      periodic.all_consistent && periodic_worst == 0.0;
    return {pass, "fibonacci " + std::to_string(consistent) + "/" + std::to_string(entries.size()) +
                      " probes consistent, max distance " + fmt(worst) + " (tolerance " + fmt(tol) +
                      "), periodic max distance " + fmt(periodic_worst)};
}

// ---- 8 ---------------------------------------------------------------------

Outcome directional() {
    Stopwatch sw;
    const ExperimentConfig cfg = load_config((kSource / "configs" / "halfplane_limits.toml").string());
    const Model model = build_model(cfg);
    const Configuration& omega = model.configurations.front();
    const Window w = Window::ball(model.hull.group, cfg.limits.m);
    const auto sample = sample_limit_set(omega, w, build_sequences(cfg, model, omega, cfg.limits.m), cfg.limits.agree);
    const auto constant = [](const std::vector<Pattern>& ps, Letter a) {
        return !ps.empty() && std::all_of(ps.begin(), ps.end(), [&](const Pattern& p) {
            return std::all_of(p.letters.begin(), p.letters.end(), [&](Letter x) { return x == a; });
        });
    };
    bool all_stable = true;
    for (const auto& p : sample.probes) all_stable = all_stable && p.stabilized;
    const auto right = sample.directional({1.0, 0.0});
    const auto left = sample.directional({-1.0, 0.0});
    std::set<Pattern> joined(right.begin(), right.end());
    joined.insert(left.begin(), left.end());
    const auto all = sample.patterns();
    const bool union_ok = std::equal(all.begin(), all.end(), joined.begin(), joined.end());
    const double s = sw.seconds();
    const bool pass = all_stable && constant(right, 0) && constant(left, 1) && union_ok && s < kDirectionalSeconds;
    return {pass, std::to_string(sample.probes.size()) + " probes, (1,0) -> " + (constant(right, 0) ? "all a" : "?") +
                      ", (-1,0) -> " + (constant(left, 1) ? "all b" : "?") + ", union " + (union_ok ? "matches" : "differs") +
                      ", " + fmt(s) + " s"};
}

// ---- 9 ---------------------------------------------------------------------

Outcome normality() {
    const Hull per = make_hull("period_q", HullParams{1, 1, false, {}});
    const CoefficientScheme scheme = make_scheme("free_laplacian", per.group, per.alphabet);
    const auto m = section(scheme, per.reference, Window::interval(per.group, 0, 200), Boundary::periodic).matrix;
    const auto spec = eigenvalues(m);
    const ResolventScanner scanner(m);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const Complex z(u(rng), u(rng));
        double d = 1e300;
        for (const auto& p : spec) d = std::min(d, std::abs(z - p));
        worst = std::max(worst, std::abs(scanner.sigma_min(z) - d));
    }
    return {worst <= kNormalityTolerance, "200 points, max |sigma_min - dist| " + fmt(worst)};
}

// ---- 10 --------------------------------------------------------------------

Outcome determinism(const ScenarioRun& fib1, const ScenarioRun& fz1) {
    const ScenarioRun fib8 = fibonacci_constancy(8).run;
    const ScenarioRun fz8 = feinberg_zee(8).run;
    std::size_t compared = 0, differing = 0;
    for (const auto& [a, b] : {std::pair{&fib1, &fib8}, std::pair{&fz1, &fz8}}) {
        for (const auto& entry : fs::directory_iterator(a->dir)) {
            if (entry.path().extension() != ".csv") continue;
            ++compared;
            const fs::path other = b->dir / entry.path().filename();
            if (!fs::exists(other) || read_file(entry.path()) != read_file(other)) ++differing;
        }
    }
    return {compared > 0 && differing == 0,
            std::to_string(compared) + " CSV files compared, " + std::to_string(differing) + " differ"};
}

} // namespace

int main() {
    int failed = 0;
    const auto report = [&](int id, const std::string& name, const Outcome& o) {
        std::printf("criterion %2d %-34s %s  %s\n", id, name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    };
    const auto guarded = [&](int id, const std::string& name, const std::function<Outcome()>& f) {
        try {
            report(id, name, f());
        } catch (const std::exception& e) {
            report(id, name, Outcome{false, std::string("error: ") + e.what()});
        }
    };

    guarded(1, "equivariance exactness", equivariance);
    guarded(2, "floquet oracle equivalence", floquet);
    guarded(3, "minimality and pseudoergodicity", minimality_chain);
    ScenarioRun fib1, fz1;
    guarded(4, "spectral constancy (fibonacci)", [&] {
        auto r = fibonacci_constancy(1);
        fib1 = r.run;
        return r.outcome;
    });
    guarded(5, "pseudospectral constancy (FZ)", [&] {
        auto r = feinberg_zee(1);
        fz1 = r.run;
        return r.outcome;
    });
    guarded(6, "norm dominance", norm_dominance);
    guarded(7, "spectral inclusion", inclusion);
    guarded(8, "directional limit sets", directional);
    guarded(9, "normal pseudospectrum", normality);
    guarded(10, "determinism across threads", [&] { return determinism(fib1, fz1); });
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
