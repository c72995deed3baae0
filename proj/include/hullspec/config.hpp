#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hullspec/catalog.hpp"
#include "hullspec/reports.hpp"
#include "hullspec/section.hpp"

namespace hullspec {

// ---- TOML subset -----------------------------------------------------------
// Comments, [table], [[array.of.tables]], key = value with strings (basic,
// with \" \\ \n \t \uXXXX escapes), integers, floats, booleans and (nested,
// possibly multi-line) arrays. No inline tables, dates or dotted keys.

struct TomlValue;
using TomlArray = std::vector<TomlValue>;

struct TomlValue {
    std::variant<bool, std::int64_t, double, std::string, TomlArray> data;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct TomlEntry {
    std::string key;
    TomlValue value;
};

struct TomlSection {
    std::string name;  ///< empty for the root table
    bool array = false;
    std::size_t line = 0;
    std::vector<TomlEntry> entries;
};

/// Root section first, then sections in file order. Throws ParseError.
std::vector<TomlSection> parse_toml(const std::string& text);

// ---- experiment configuration ---------------------------------------------

/// Either a ball (radius) or a lattice box (inclusive lower/upper).
struct WindowSpec {
    std::optional<std::size_t> radius;
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
    friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

struct SchemeConfig {
    std::string name;
    std::size_t block_dim = 1;
    std::optional<std::vector<double>> letter_values;
    friend bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

struct HullConfig {
    std::string name;
    std::string group = "lattice";  ///< lattice | heisenberg (full_pm1 only)
    std::size_t rank = 1;
    std::size_t q = 2;
    friend bool operator==(const HullConfig&, const HullConfig&) = default;
};

struct GridConfig {
    double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
    std::size_t n_re = 0, n_im = 0;
    double cutoff = 0.05;
    WindowSpec window;
    friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

struct CertificationConfig {
    std::size_t n = 3;
    std::size_t big_n = 0;
    std::size_t radius = 200;
    bool expect_minimal = true;
    friend bool operator==(const CertificationConfig&, const CertificationConfig&) = default;
};

struct LimitsConfig {
    std::size_t m = 8;
    std::size_t agree = 3;
    friend bool operator==(const LimitsConfig&, const LimitsConfig&) = default;
};

/// kind = arithmetic: g_n = start + n step, n = 1..count.
/// kind = occurrence: one sequence per legal pattern on the observation
/// window (at most max_patterns, 0 = all), each listing `count` positions
/// of word length >= min_length where the pattern occurs.
struct SequenceConfig {
    std::string kind = "arithmetic";
    std::vector<std::int64_t> start;
    std::vector<std::int64_t> step;
    std::size_t count = 6;
    std::optional<std::vector<double>> direction;
    std::size_t min_length = 0;
    std::size_t search_radius = 0;
    std::size_t max_patterns = 0;
    friend bool operator==(const SequenceConfig&, const SequenceConfig&) = default;
};

/// Inline tolerances; they take precedence over the tolerance file.
struct ToleranceOverrides {
    std::optional<double> hausdorff;
    std::optional<double> grid;
    std::optional<double> area_fraction;
    std::optional<double> inclusion;
    std::optional<double> floquet;
    friend bool operator==(const ToleranceOverrides&, const ToleranceOverrides&) = default;
};

struct ExperimentConfig {
    SchemeConfig scheme;
    HullConfig hull;
    std::vector<ConfigurationSpec> configurations;
    std::vector<WindowSpec> windows;
    Boundary boundary = Boundary::truncate;
    std::optional<GridConfig> grid;
    std::vector<double> epsilons;
    PersistenceOptions persistence;
    std::optional<CertificationConfig> certification;
    LimitsConfig limits;
    std::vector<SequenceConfig> sequences;
    std::size_t floquet_theta = 0;
    std::string tolerance_file;
    std::string tolerance_key;
    ToleranceOverrides tolerances;
    std::string output_dir = "out";
    std::size_t threads = 1;
};

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

/// Throws ParseError (with line/column) on syntax errors, unknown keys and
/// ill-typed values.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// TOML text that parses back to an equal config (doubles printed with 17
/// significant digits).
std::string serialize_config(const ExperimentConfig& config);

Window make_window(const GroupSpec& group, const WindowSpec& spec);
HullParams hull_params(const ExperimentConfig& config);

} // namespace hullspec
