#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hullspec/catalog.hpp"
#include "hullspec/error.hpp"
#include "hullspec/hausdorff.hpp"
#include "hullspec/limit_set.hpp"
#include "hullspec/linalg.hpp"
#include "hullspec/pseudospectrum.hpp"
#include "hullspec/reports.hpp"
#include "hullspec/spectrum.hpp"

using namespace hullspec;

namespace {

Eigen::MatrixXcd random_matrix(std::size_t n, std::size_t band, std::mt19937_64& rng, double upper_scale = 1.0) {
    std::normal_distribution<double> g(0.0, 1.0);
    const auto size = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            if (band == 0 || static_cast<std::size_t>(std::abs(i - j)) <= band)
                m(i, j) = Complex(g(rng), g(rng)) * (i < j ? upper_scale : 1.0);
    return m;
}

double dist_to_set(Complex z, const std::vector<Complex>& pts) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) d = std::min(d, std::abs(z - p));
    return d;
}

} // namespace

TEST_CASE("hausdorff distances") {
    const std::vector<Complex> a{{0, 0}, {1, 0}}, b{{0, 0}}, c{{0, 3}};
    CHECK(directed_distance(b, a) == 0.0);
    CHECK(directed_distance(a, b) == 1.0);
    CHECK(hausdorff_distance(a, b) == 1.0);
    CHECK(hausdorff_distance(a, c) == doctest::Approx(std::sqrt(10.0)));
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK_THROWS_AS(directed_distance({}, a), DomainError);
    CHECK_THROWS_AS(hausdorff_distance(a, {}), DomainError);
}

TEST_CASE("persistent points") {
    const std::vector<Complex> base{{0, 0}, {1, 0}, {2, 0}};
    const std::vector<std::vector<Complex>> others{{{0.01, 0}, {2.5, 0}}, {{0, 0.02}, {1.0, 0}}};
    const auto kept = persistent_points(base, others, 0.05);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0] == Complex(0, 0));
    CHECK(persistent_points(base, {}, 0.0) == base);
}

TEST_CASE("eigenvalues are sorted and hermitian spectra are real") {
    std::mt19937_64 rng(3);
    Eigen::MatrixXcd m = random_matrix(30, 0, rng);
    Eigen::MatrixXcd h = m + m.adjoint();
    const auto eh = eigenvalues(h);
    for (const auto& z : eh) CHECK(z.imag() == 0.0);
    CHECK(std::is_sorted(eh.begin(), eh.end(), [](Complex a, Complex b) { return a.real() < b.real(); }));
    const auto em = eigenvalues(m);
    CHECK(em.size() == 30);
    for (std::size_t i = 1; i < em.size(); ++i)
        CHECK((em[i - 1].real() < em[i].real() || (em[i - 1].real() == em[i].real() && em[i - 1].imag() <= em[i].imag())));
}

TEST_CASE("computed eigenvalues satisfy the backward-error contract") {
    std::mt19937_64 rng(21);
    for (std::size_t n : {5, 40, 120}) {
        for (double scale : {1.0, 30.0}) {
            const Eigen::MatrixXcd m = random_matrix(n, 0, rng, scale);
            CHECK(max_eigen_residual(m, eigenvalues(m)) <= backward_error_bound(m));
        }
    }
}

TEST_CASE("desk bound is enforced") {
    const Hull hull = make_hull("full_pm1");
    const CoefficientScheme scheme = make_scheme("feinberg_zee", hull.group, hull.alphabet);
    const FiniteSection sec = section(scheme, hull.reference, Window::interval(hull.group, 0, 50), Boundary::truncate);
    CHECK_THROWS_AS(eigenvalues(sec, 40), ResourceError);
    const SpectrumSample s = eigenvalues(sec);
    CHECK(s.points.size() == 50);
    CHECK(s.provenance.scheme == "feinberg_zee");
}

TEST_CASE("resolvent scanner agrees with the full singular value decomposition") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0.0, 1.0);
    for (std::size_t trial = 0; trial < 24; ++trial) {
        const std::size_t n = 5 + 8 * trial;
        const Eigen::MatrixXcd m = random_matrix(n, trial % 2 ? 2 : 0, rng, trial % 3 == 0 ? 10.0 : 1.0);
        const ResolventScanner scanner(m);
        CHECK(scanner.banded() == (trial % 2 == 1 && n > 20));
        const double norm = largest_singular_value(m);
        const auto ev = eigenvalues(m);
        for (std::size_t k = 0; k < 12; ++k) {
            const Complex z = k < 4 ? ev[k * ev.size() / 4] + Complex(1e-6 * static_cast<double>(k), 0.0)
                                    : Complex(3 * g(rng), 3 * g(rng));
            Eigen::MatrixXcd b = -m;
            b.diagonal().array() += z;
            const double ref = smallest_singular_value(b);
            const double got = scanner.sigma_min(z);
            if (ref >= 1e-6 * norm) {
                CHECK(std::abs(got - ref) <= 1e-8 * ref);
            } else {
                // Near the spectrum both values carry backward error ~ u ||M|| n.
                CHECK(std::abs(got - ref) <= 1e-8 * ref + 1e-16 * static_cast<double>(n) * norm);
            }
        }
    }
}

TEST_CASE("resolvent scanner is independent of call order") {
    std::mt19937_64 rng(8);
    const Eigen::MatrixXcd m = random_matrix(60, 1, rng);
    const ResolventScanner a(m), b(m);
    const std::vector<Complex> zs{{0.1, 0.2}, {1.5, -0.3}, {-2, 2}};
    std::vector<double> forward, backward(3);
    for (const auto& z : zs) forward.push_back(a.sigma_min(z));
    for (std::size_t i = 3; i-- > 0;) backward[i] = b.sigma_min(zs[i]);
    CHECK(forward == backward);
}

TEST_CASE("normality law") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<Eigen::MatrixXcd> mats;
    const Hull per = make_hull("period_q", HullParams{1, 1, false, {}});
    mats.push_back(section(make_scheme("free_laplacian", per.group, per.alphabet), per.reference,
                           Window::interval(per.group, 0, 120), Boundary::periodic)
                       .matrix);
    const Hull fib = make_hull("fibonacci");
    mats.push_back(section(make_scheme("fibonacci_jacobi", fib.group, fib.alphabet), fib.reference,
                           Window::interval(fib.group, -60, 150), Boundary::truncate)
                       .matrix);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd r(80, 80);
    for (Eigen::Index i = 0; i < 80; ++i)
        for (Eigen::Index j = 0; j < 80; ++j) r(i, j) = g(rng);
    mats.push_back((r + r.transpose()).cast<Complex>());
    for (const auto& m : mats) {
        const auto spec = eigenvalues(m);
        const ResolventScanner scanner(m);
        const auto grid = sigma_min_grid(m, Rectangle{-3, 3, -3, 3}, Resolution{14, 14});
        for (int t = 0; t < 200; ++t) {
            const Complex z(u(rng), u(rng));
            CHECK(std::abs(scanner.sigma_min(z) - dist_to_set(z, spec)) <= 1e-8);
        }
        Rectangle rect{-3, 3, -3, 3};
        PseudospectrumGrid pg{rect, Resolution{14, 14}, grid, Window::ball(per.group, 0), Boundary::truncate, {}};
        for (std::size_t j = 0; j < 14; ++j)
            for (std::size_t i = 0; i < 14; ++i) CHECK(std::abs(pg.at(i, j) - dist_to_set(pg.node(i, j), spec)) <= 1e-8);
    }
}

TEST_CASE("grid nodes and layout") {
    PseudospectrumGrid g{Rectangle{-1, 1, 0, 2}, Resolution{5, 3}, std::vector<double>(15, 1.0), Window::ball(GroupSpec::lattice(1), 0),
                         Boundary::truncate, {}};
    CHECK(g.node(0, 0) == Complex(-1, 0));
    CHECK(g.node(4, 2) == Complex(1, 2));
    CHECK(g.node(2, 1) == Complex(0, 1));
    g.sigma_min[1 * 5 + 3] = 0.25;
    CHECK(g.at(3, 1) == 0.25);
    CHECK(sublevel_count(g, 0.5) == 1);
    PseudospectrumGrid single{Rectangle{2, 3, 4, 5}, Resolution{1, 1}, {0.0}, g.window, Boundary::truncate, {}};
    CHECK(single.node(0, 0) == Complex(2, 4));
}

TEST_CASE("resolvent norm clamps on the spectrum") {
    CHECK(resolvent_norm(0.5).value == 2.0);
    CHECK_FALSE(resolvent_norm(0.5).clamped);
    CHECK(resolvent_norm(0.0).value == 1e16);
    CHECK(resolvent_norm(0.0).clamped);
    CHECK(resolvent_norm(1e-20).clamped);
}

TEST_CASE("grid budget") {
    const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(100, 100);
    CHECK_THROWS_AS(sigma_min_grid(m, Rectangle{0, 1, 0, 1}, Resolution{100, 100}, 1, 1e7), ResourceError);
    CHECK_THROWS_AS(sigma_min_grid(m, Rectangle{0, 1, 0, 1}, Resolution{0, 10}), DomainError);
}

TEST_CASE("identity pseudospectrum vanishes at one") {
    const Hull hull = make_hull("full_pm1");
    const CoefficientScheme scheme = make_scheme("identity", hull.group, hull.alphabet);
    const auto grid = pseudospectrum_grid(scheme, hull.reference, Window::interval(hull.group, 0, 20), Boundary::truncate,
                                          Rectangle{0, 2, -1, 1}, Resolution{51, 51});
    CHECK(grid.node(25, 25) == Complex(1, 0));
    CHECK(grid.at(25, 25) == 0.0);
    for (std::size_t j = 0; j < 51; ++j)
        for (std::size_t i = 0; i < 51; ++i) CHECK(grid.at(i, j) == doctest::Approx(std::abs(grid.node(i, j) - 1.0)).epsilon(1e-12));
}

TEST_CASE("grids are identical for every thread count") {
    const Hull hull = make_hull("full_pm1");
    const CoefficientScheme scheme = make_scheme("feinberg_zee", hull.group, hull.alphabet);
    const Window w = Window::interval(hull.group, 0, 120);
    const Rectangle rect{-2.5, 2.5, -2.5, 2.5};
    const auto one = pseudospectrum_grid(scheme, hull.reference, w, Boundary::truncate, rect, Resolution{17, 13}, 1);
    for (std::size_t t : {2, 3, 8, 64}) {
        const auto many = pseudospectrum_grid(scheme, hull.reference, w, Boundary::truncate, rect, Resolution{17, 13}, t);
        CHECK(many.sigma_min == one.sigma_min);
    }
}

TEST_CASE("sigma_min on a window bounds the larger window up to the discarded coupling") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    const Hull hull = make_hull("full_pm1");
    for (const auto& name : {"feinberg_zee", "fibonacci_jacobi", "free_laplacian"}) {
        const CoefficientScheme scheme = make_scheme(name, hull.group, hull.alphabet);
        const Window small = Window::interval(hull.group, 0, 40);
        for (std::size_t grow : {1, 5, 30}) {
            const Window large = Window::box(hull.group, {-static_cast<std::int64_t>(grow)}, {39 + static_cast<std::int64_t>(grow)});
            const auto a = section(scheme, hull.reference, small, Boundary::truncate).matrix;
            const auto b = section(scheme, hull.reference, large, Boundary::truncate).matrix;
            // Rows of the larger window outside the smaller one, columns inside.
            std::vector<GroupElement> outside;
            for (const auto& k : large.elements())
                if (!small.contains(k)) outside.push_back(k);
            const Window rim = Window::from_elements(hull.group, outside);
            const double coupling = largest_singular_value(compression(scheme, hull.reference, rim, small));
            CHECK(coupling <= norm_upper_bound(scheme));
            const ResolventScanner sa(a), sb(b);
            for (int t = 0; t < 20; ++t) {
                const Complex z(u(rng), u(rng));
                CHECK(sa.sigma_min(z) >= sb.sigma_min(z) - coupling - 1e-12);
                CHECK(sa.sigma_min(z) >= sb.sigma_min(z) - norm_upper_bound(scheme) - 1e-12);
            }
        }
    }
}

TEST_CASE("persistence filter and window enlargement") {
    const GroupSpec z = GroupSpec::lattice(1);
    CHECK(enlarge(Window::box(z, {0}, {9}), 2) == Window::box(z, {-2}, {11}));
    CHECK(enlarge(Window::ball(z, 3), 1) == Window::ball(z, 4));
    const Hull fib = make_hull("fibonacci");
    const CoefficientScheme scheme = make_scheme("fibonacci_jacobi", fib.group, fib.alphabet);
    const Window w = Window::box(z, {-44}, {44});
    const auto all = eigenvalues(section(scheme, fib.reference, w, Boundary::truncate).matrix);
    const auto kept = persistent_spectrum(scheme, fib.reference, w, Boundary::truncate, PersistenceOptions{});
    CHECK(kept.size() <= all.size());
    CHECK(kept.size() > all.size() / 2);
    CHECK(directed_distance(kept, all) == 0.0);
    PersistenceOptions off;
    off.enabled = false;
    CHECK(persistent_spectrum(scheme, fib.reference, w, Boundary::truncate, off) == all);
}

TEST_CASE("constancy over a periodic hull") {
    const Hull hull = make_hull("period_q", HullParams{2, 1, false, {}});
    const CoefficientScheme scheme = make_scheme("period_q_jacobi", hull.group, hull.alphabet);
    ConstancyInput in;
    in.hull_name = hull.name;
    in.hull = &hull.subshift;
    in.configurations = {hull.reference, shift(hull.reference, GroupElement::lattice({1})),
                         shift(hull.reference, GroupElement::lattice({4}))};
    in.windows = {Window::interval(hull.group, 0, 10), Window::interval(hull.group, 0, 20)};
    in.boundary = Boundary::periodic;
    in.persistence.enabled = false;
    in.tolerances.hausdorff = 1e-12;
    in.certification = CertificationLevel{3, 8, 20};
    const auto report = constancy_report(scheme, in);
    CHECK(report.pairs.size() == 3);
    for (const auto& p : report.pairs)
        for (double d : p.hausdorff) CHECK(d <= 1e-12);
    // Shift by a full period: identical matrices, identical spectra.
    CHECK(report.pairs[1].hausdorff == std::vector<double>{0.0, 0.0});
    CHECK(report.hypothesis_verified);
    CHECK(report.pass);
}

TEST_CASE("constancy fails on a non-pseudoergodic configuration") {
    const Hull hull = make_hull("full_pm1");
    const CoefficientScheme scheme = make_scheme("fibonacci_jacobi", hull.group, hull.alphabet);
    ConstancyInput in;
    in.hull = &hull.subshift;
    in.configurations = {Configuration::explicit_random(hull.group, hull.alphabet, 1),
                         realize(hull, ConfigurationSpec{"constant", {}, std::string("1"), {}})};
    in.windows = {Window::interval(hull.group, 0, 60), Window::interval(hull.group, 0, 120)};
    in.persistence.enabled = false;
    in.tolerances.hausdorff = 0.1;
    in.certification = CertificationLevel{2, 0, 100};
    const auto report = constancy_report(scheme, in);
    CHECK_FALSE(report.hypothesis_verified);
    CHECK_FALSE(report.within_tolerance);
    CHECK_FALSE(report.pass);
}

TEST_CASE("inclusion check on a periodic hull") {
    const Hull hull = make_hull("period_q", HullParams{3, 1, false, {}});
    const CoefficientScheme scheme = make_scheme("period_q_jacobi", hull.group, hull.alphabet);
    std::vector<LimitOperatorProbe> probes;
    for (std::int64_t s = 0; s < 9; s += 3)
        probes.push_back(approximate_limit_operator(
            scheme, hull.reference, arithmetic_sequence(GroupElement::lattice({s}), GroupElement::lattice({60}), 5), 4));
    const auto report = inclusion_check(scheme, hull.reference, probes, Window::ball(hull.group, 4), Boundary::truncate, 0.0);
    // Starts on multiples of the period see the same patterns as ball(4) of omega.
    for (const auto& e : report.entries) CHECK(e.distance <= 1e-14);
    const auto matched = inclusion_check(scheme, hull.reference, {probes[0]}, Window::ball(hull.group, 4),
                                         Boundary::truncate, 0.0);
    CHECK(matched.entries[0].distance == 0.0);
    CHECK(matched.all_consistent);

    const Hull full = make_hull("full_pm1");
    const CoefficientScheme fz = make_scheme("feinberg_zee", full.group, full.alphabet);
    const auto loose = approximate_limit_operator(
        fz, full.reference, arithmetic_sequence(GroupElement::lattice({0}), GroupElement::lattice({17}), 8), 6);
    CHECK_THROWS_AS(inclusion_check(fz, full.reference, {loose}, Window::ball(full.group, 20), Boundary::truncate, 1.0),
                    DomainError);
}
