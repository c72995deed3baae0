#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hullspec/catalog.hpp"
#include "hullspec/certify.hpp"
#include "hullspec/limit_operator.hpp"
#include "hullspec/limit_set.hpp"
#include "hullspec/pseudospectrum.hpp"
#include "hullspec/reports.hpp"
#include "hullspec/section.hpp"

namespace hullspec {

using Json = nlohmann::ordered_json;

/// "%.17g": round-trips every double.
std::string format_double(double x);

/// Header `re,im`.
void write_spectrum_csv(const std::string& path, const std::vector<std::complex<double>>& points);
/// Header `re,im,sigma_min`, imaginary index outer.
void write_grid_csv(const std::string& path, const PseudospectrumGrid& grid);
/// Header `row,col,re,im`, nonzero entries in row-major order.
void write_section_csv(const std::string& path, const FiniteSection& section);

/// Magic "FSEC", u32 size, u32 block dim, then size*size (re, im) pairs of
/// little-endian f64 in row-major order.
void write_section_binary(const std::string& path, const FiniteSection& section);
struct SectionDump {
    std::uint32_t block_dim = 1;
    Eigen::MatrixXcd matrix;
};
SectionDump read_section_binary(const std::string& path);

void write_text(const std::string& path, const std::string& text);
void write_json(const std::string& path, const Json& json);

Json to_json(const GroupSpec& group);
/// {"group": ..., "n": N, "window": {"kind": "ball", "radius": r}} or a box
/// with "lower"/"upper" (and "halfwidths" when symmetric).
Json to_json(const Window& window);
Json to_json(const Pattern& pattern, const Alphabet& alphabet);
Json to_json(const ConfigurationSpec& spec);
Json hull_json(const Hull& hull);
Json to_json(const MinimalityCertificate& cert, const Alphabet& alphabet);
Json to_json(const PseudoergodicCertificate& cert, const Alphabet& alphabet);
Json to_json(const LimitOperatorProbe& probe, const Alphabet& alphabet);
Json to_json(const LimitSetSample& sample, const Alphabet& alphabet);
Json to_json(const ConstancyReport& report);
Json to_json(const InclusionReport& report);

/// Scatter of point sets, one color per set.
std::string spectra_svg(const std::vector<std::vector<std::complex<double>>>& sets,
                        const std::vector<std::string>& labels);
/// log10 sigma_min heatmap with the epsilon-sublevel boundaries outlined.
std::string heatmap_svg(const PseudospectrumGrid& grid, const std::vector<double>& epsilons);

} // namespace hullspec
