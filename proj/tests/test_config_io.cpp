#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hullspec/config.hpp"
#include "hullspec/error.hpp"
#include "hullspec/experiment.hpp"
#include "hullspec/io.hpp"

using namespace hullspec;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("hullspec_unit_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

const std::string kMinimal = "[scheme]\nname = \"identity\"\n\n[hull]\nname = \"full_pm1\"\n";

ParseError parse_failure(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("toml subset") {
    const auto sections = parse_toml("a = 1\nb = -2.5e3 # note\nc = \"x\\\"y\\u00e9\"\nd = [[1, 2],\n [3]]\n"
                                     "e = true\n[t.u]\nf = []\n[[arr]]\ng = 1\n[[arr]]\ng = 2\n");
    REQUIRE(sections.size() == 4);
    CHECK(std::get<std::int64_t>(sections[0].entries[0].value.data) == 1);
    CHECK(std::get<double>(sections[0].entries[1].value.data) == -2500.0);
    CHECK(std::get<std::string>(sections[0].entries[2].value.data) == "x\"y\xc3\xa9");
    const auto& d = std::get<TomlArray>(sections[0].entries[3].value.data);
    CHECK(d.size() == 2);
    CHECK(std::get<TomlArray>(d[1].data).size() == 1);
    CHECK(std::get<bool>(sections[0].entries[4].value.data));
    CHECK(sections[1].name == "t.u");
    CHECK(sections[2].array);
    CHECK(sections[3].line == 11);
    CHECK(sections[2].entries[0].value.line == 10);
    CHECK(sections[2].entries[0].value.column == 5);
}

TEST_CASE("toml syntax errors carry positions") {
    struct Case {
        const char* text;
        std::size_t line;
    };
    for (const Case c : {Case{"a = \n", 1}, Case{"a = 1\nb = [1, 2\n", 3}, Case{"a = \"open\n", 1},
                         Case{"a = 1\na = 2\n", 2}, Case{"[t]\n[t]\n", 2}, Case{"x = 1\n[bad\n", 2},
                         Case{"a = 1 2\n", 1}, Case{"a = 0x1g\n", 1}, Case{"a = \"\\q\"\n", 1}}) {
        CAPTURE(c.text);
        try {
            parse_toml(c.text);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.line() == c.line);
            CHECK(e.column() >= 1);
        }
    }
}

TEST_CASE("config rejects unknown keys and tables") {
    const ParseError e1 = parse_failure(kMinimal + "colour = 3\n");
    CHECK(e1.line() == 6);
    CHECK(std::string(e1.what()).find("colour") != std::string::npos);
    const ParseError e2 = parse_failure(kMinimal + "\n[[configuration]]\nrule = \"explicit\"\nsede = 4\n");
    CHECK(e2.line() == 9);
    CHECK(e2.column() == 8);
    const ParseError e3 = parse_failure(kMinimal + "[plotting]\n");
    CHECK(e3.line() == 6);
    const ParseError e4 = parse_failure("[hull]\nname = \"fibonacci\"\n");
    CHECK(std::string(e4.what()).find("scheme") != std::string::npos);
    const ParseError e5 = parse_failure(kMinimal + "threads = \"four\"\n");
    CHECK(e5.line() == 6);
    CHECK(e5.column() == 11);
    const ParseError e6 = parse_failure(kMinimal + "[[window]]\nradius = 2\nlower = [0]\nupper = [1]\n");
    CHECK(e6.line() == 6);
    const ParseError e7 = parse_failure(kMinimal + "boundary = \"mirror\"\n");
    CHECK(e7.line() == 6);
}

TEST_CASE("config defaults") {
    const ExperimentConfig c = parse_config(kMinimal);
    CHECK(c.scheme.name == "identity");
    CHECK(c.scheme.block_dim == 1);
    CHECK(c.boundary == Boundary::truncate);
    CHECK(c.threads == 1);
    CHECK(c.persistence.enabled);
    CHECK(c.persistence.enlargements == std::vector<std::size_t>{1, 2, 3});
    CHECK(c.configurations.empty());
    CHECK_FALSE(c.grid);
}

TEST_CASE("canonical configs round-trip exactly") {
    std::vector<ExperimentConfig> configs{fibonacci_constancy_config(), feinberg_zee_grid_config(),
                                          fibonacci_inclusion_config(), period2_constancy_config(),
                                          identity_grid_config()};
    for (std::size_t q = 1; q <= 3; ++q) configs.push_back(floquet_config(q));
    for (const auto& c : configs) {
        const std::string text = serialize_config(c);
        const ExperimentConfig back = parse_config(text);
        CHECK(back == c);
        CHECK(serialize_config(back) == text);
    }
}

TEST_CASE("doubles round-trip bit-exactly through the config") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> bits;
    ExperimentConfig c = parse_config(kMinimal);
    for (int i = 0; i < 200; ++i) {
        double x;
        do {
            const std::uint64_t b = bits(rng);
            std::memcpy(&x, &b, sizeof x);
        } while (!std::isfinite(x));
        c.epsilons.push_back(x);
    }
    c.epsilons.push_back(0.1);
    c.epsilons.push_back(-0.0);
    c.epsilons.push_back(5e-324);
    c.epsilons.push_back(1e300);
    c.scheme.letter_values = std::vector<double>{1.0 / 3.0, 2.0};
    c.tolerances.hausdorff = 0.2;
    c.sequences.push_back(SequenceConfig{"arithmetic", {1, 2}, {3, -4}, 5, std::vector<double>{0.6, -0.8}, 0, 0, 0});
    const ExperimentConfig back = parse_config(serialize_config(c));
    REQUIRE(back.epsilons.size() == c.epsilons.size());
    for (std::size_t i = 0; i < c.epsilons.size(); ++i)
        CHECK(std::memcmp(&back.epsilons[i], &c.epsilons[i], sizeof(double)) == 0);
    CHECK(back == c);
}

TEST_CASE("shipped configs equal the canonical experiments") {
    const fs::path dir = fs::path(HULLSPEC_SOURCE_DIR) / "configs";
    CHECK(load_config((dir / "fibonacci_constancy.toml").string()) == fibonacci_constancy_config());
    CHECK(load_config((dir / "feinberg_zee_grid.toml").string()) == feinberg_zee_grid_config());
    CHECK(load_config((dir / "fibonacci_inclusion.toml").string()) == fibonacci_inclusion_config());
    CHECK(load_config((dir / "period2_constancy.toml").string()) == period2_constancy_config());
    CHECK(load_config((dir / "identity_grid.toml").string()) == identity_grid_config());
    CHECK(load_config((dir / "floquet_q2.toml").string()) == floquet_config(2));
    for (const auto& entry : fs::directory_iterator(dir)) {
        CAPTURE(entry.path().string());
        CHECK_NOTHROW(build_model(load_config(entry.path().string())));
    }
}

TEST_CASE("windows from config") {
    const GroupSpec z2 = GroupSpec::lattice(2);
    CHECK(make_window(z2, WindowSpec{2, {}, {}}) == Window::ball(z2, 2));
    CHECK(make_window(z2, WindowSpec{std::nullopt, {-1, 0}, {1, 3}}) == Window::box(z2, {-1, 0}, {1, 3}));
    const auto c = parse_config(kMinimal + "[[window]]\nhalfwidths = [3]\n");
    CHECK(c.windows[0].lower == std::vector<std::int64_t>{-3});
    CHECK(c.windows[0].upper == std::vector<std::int64_t>{3});
}

TEST_CASE("csv writers") {
    const fs::path dir = scratch("csv");
    write_spectrum_csv((dir / "s.csv").string(), {{1.5, -0.25}, {0.1, 0}});
    CHECK(read_file(dir / "s.csv") == "re,im\n1.5,-0.25\n0.10000000000000001,0\n");
    PseudospectrumGrid g{Rectangle{0, 1, 0, 1}, Resolution{2, 2}, {1, 2, 3, 4}, Window::ball(GroupSpec::lattice(1), 0),
                         Boundary::truncate, {}};
    write_grid_csv((dir / "g.csv").string(), g);
    CHECK(read_file(dir / "g.csv") == "re,im,sigma_min\n0,0,1\n1,0,2\n0,1,3\n1,1,4\n");
    const Hull hull = make_hull("full_pm1");
    const auto sec = section(make_scheme("free_laplacian", hull.group, hull.alphabet), hull.reference,
                             Window::interval(hull.group, 0, 3), Boundary::truncate);
    write_section_csv((dir / "m.csv").string(), sec);
    CHECK(read_file(dir / "m.csv") == "row,col,re,im\n0,1,1,0\n1,0,1,0\n1,2,1,0\n2,1,1,0\n");
}

TEST_CASE("section dumps round-trip") {
    const fs::path dir = scratch("fsec");
    const Hull hull = make_hull("full_pm1", HullParams{2, 1, true, {}});
    const auto sec = section(make_scheme("heisenberg_adjacency", hull.group, hull.alphabet, 2), hull.reference,
                             Window::ball(hull.group, 2), Boundary::truncate);
    const std::string path = (dir / "a.fsec").string();
    write_section_binary(path, sec);
    const SectionDump dump = read_section_binary(path);
    CHECK(dump.block_dim == 2);
    CHECK(dump.matrix == sec.matrix);
    const std::string bytes = read_file(path);
    CHECK(bytes.substr(0, 4) == "FSEC");
    CHECK(bytes.size() == 12 + 16 * static_cast<std::size_t>(sec.matrix.size()));
    write_text((dir / "junk").string(), "nope");
    CHECK_THROWS_AS(read_section_binary((dir / "junk").string()), Error);
}

TEST_CASE("report json") {
    const Hull hull = make_hull("period_q", HullParams{2, 1, false, {}});
    const auto j = hull_json(hull);
    CHECK(j["domain"]["group"] == "lattice");
    CHECK(j["domain"]["n"] == 1);
    Json w = to_json(Window::centered_box(hull.group, {4}));
    CHECK(w["window"]["halfwidths"] == Json::array({4}));
    CHECK(w["window"]["size"] == 9);
}

TEST_CASE("svg output is well formed") {
    const std::string s = spectra_svg({{{0, 0}, {1, 1}}, {{2, 0}}}, {"a", "b"});
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    PseudospectrumGrid g{Rectangle{0, 1, 0, 1}, Resolution{3, 3}, {1, 0.1, 1, 0.1, 0.01, 0.1, 1, 0.1, 1},
                         Window::ball(GroupSpec::lattice(1), 0), Boundary::truncate, {}};
    const std::string h = heatmap_svg(g, {0.5});
    CHECK(h.find("</svg>") != std::string::npos);
}

TEST_CASE("tolerance resolution") {
    const fs::path dir = scratch("tol");
    const fs::path file = dir / "t.json";
    write_text(file.string(), R"({"entries": {"k": {"hausdorff": 0.25, "grid": 0.5}}})");
    ExperimentConfig c = parse_config(kMinimal);
    c.tolerance_file = file.string();
    c.tolerance_key = "k";
    ::unsetenv("HULLSPEC_TOLERANCES");
    CHECK(tolerance_path(c) == file.string());
    auto t = resolve_tolerances(c);
    CHECK(t.hausdorff == 0.25);
    CHECK(t.grid == 0.5);
    CHECK(std::isinf(t.inclusion));
    c.tolerances.grid = 0.125;
    CHECK(resolve_tolerances(c).grid == 0.125);

    const fs::path other = dir / "u.json";
    write_text(other.string(), R"({"entries": {"k": {"hausdorff": 0.75}}})");
    ::setenv("HULLSPEC_TOLERANCES", other.string().c_str(), 1);
    CHECK(resolve_tolerances(c).hausdorff == 0.75);
    ::unsetenv("HULLSPEC_TOLERANCES");

    c.tolerance_key = "missing";
    CHECK_THROWS_AS(resolve_tolerances(c), Error);
}
