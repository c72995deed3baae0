#include "hullspec/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hullspec/error.hpp"

namespace hullspec {

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw Error("cannot write '" + path + "'");
    return out;
}

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& out, double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_le(std::istream& in, int bytes) {
    unsigned char b[8] = {};
    if (!in.read(reinterpret_cast<char*>(b), bytes)) throw Error("truncated section dump");
    std::uint64_t v = 0;
    for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

Json coords(const GroupElement& g) { return Json(g.coordinates()); }

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::certified: return "certified";
        case SearchStatus::refuted: return "refuted";
        case SearchStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Json matrix_json(const IncidenceMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

// Finite doubles pass through, infinities become strings so the JSON stays valid.
Json number(double x) {
    if (std::isfinite(x)) return x;
    return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string color_ramp(double t) {
    t = std::clamp(t, 0.0, 1.0);
    // Dark blue to yellow.
    const int r = static_cast<int>(std::lround(30 + t * 220));
    const int g = static_cast<int>(std::lround(20 + t * 210));
    const int b = static_cast<int>(std::lround(110 - t * 80));
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    auto out = open_out(path, true);
    out << text;
}

void write_json(const std::string& path, const Json& json) { write_text(path, json.dump(2) + "\n"); }

void write_spectrum_csv(const std::string& path, const std::vector<std::complex<double>>& points) {
    std::string text = "re,im\n";
    for (const auto& z : points) text += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
    write_text(path, text);
}

void write_grid_csv(const std::string& path, const PseudospectrumGrid& grid) {
    std::string text = "re,im,sigma_min\n";
    for (std::size_t j = 0; j < grid.resolution.n_im; ++j)
        for (std::size_t i = 0; i < grid.resolution.n_re; ++i) {
            const auto z = grid.node(i, j);
            text += format_double(z.real()) + "," + format_double(z.imag()) + "," + format_double(grid.at(i, j)) + "\n";
        }
    write_text(path, text);
}

void write_section_csv(const std::string& path, const FiniteSection& section) {
    std::string text = "row,col,re,im\n";
    const auto& m = section.matrix;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != std::complex<double>(0.0, 0.0))
                text += std::to_string(i) + "," + std::to_string(j) + "," + format_double(m(i, j).real()) + "," +
                        format_double(m(i, j).imag()) + "\n";
    write_text(path, text);
}

void write_section_binary(const std::string& path, const FiniteSection& section) {
    auto out = open_out(path, true);
    out.write("FSEC", 4);
    const auto n = static_cast<std::uint32_t>(section.matrix.rows());
    put_u32(out, n);
    put_u32(out, static_cast<std::uint32_t>(section.block_dim));
    for (Eigen::Index i = 0; i < section.matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < section.matrix.cols(); ++j) {
            put_f64(out, section.matrix(i, j).real());
            put_f64(out, section.matrix(i, j).imag());
        }
}

SectionDump read_section_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "FSEC", 4) != 0) throw Error("'" + path + "' is not a section dump");
    const auto n = static_cast<Eigen::Index>(get_le(in, 4));
    SectionDump dump;
    dump.block_dim = static_cast<std::uint32_t>(get_le(in, 4));
    dump.matrix.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = std::bit_cast<double>(get_le(in, 8));
            const double im = std::bit_cast<double>(get_le(in, 8));
            dump.matrix(i, j) = {re, im};
        }
    return dump;
}

Json to_json(const GroupSpec& group) {
    Json j;
    j["group"] = group.is_lattice() ? "lattice" : "heisenberg";
    if (group.is_lattice()) j["n"] = group.rank();
    return j;
}

Json to_json(const Window& window) {
    Json j = to_json(window.group());
    Json w;
    if (const auto* ball = std::get_if<window_kind::Ball>(&window.descriptor())) {
        w["kind"] = "ball";
        w["radius"] = ball->radius;
    } else if (const auto box = window.as_box()) {
        w["kind"] = "box";
        w["lower"] = box->lower;
        w["upper"] = box->upper;
        bool symmetric = true;
        for (std::size_t i = 0; i < box->lower.size(); ++i) symmetric = symmetric && box->lower[i] == -box->upper[i];
        if (symmetric) w["halfwidths"] = box->upper;
    } else {
        w["kind"] = "explicit";
        Json elems = Json::array();
        for (const auto& g : window.elements()) elems.push_back(coords(g));
        w["elements"] = elems;
    }
    w["size"] = window.size();
    j["window"] = w;
    return j;
}

Json to_json(const Pattern& pattern, const Alphabet& alphabet) {
    Json j = to_json(pattern.window);
    Json letters = Json::array();
    for (Letter a : pattern.letters) letters.push_back(alphabet.name(a));
    j["letters"] = letters;
    return j;
}

Json to_json(const ConfigurationSpec& spec) {
    Json c;
    c["rule"] = spec.rule;
    if (spec.seed) c["seed"] = *spec.seed;
    if (spec.letter) c["letter"] = *spec.letter;
    if (!spec.shift.empty()) c["shift"] = spec.shift;
    return Json{{"config", c}};
}

Json hull_json(const Hull& hull) {
    Json j;
    if (hull.subshift.kind() == SubshiftKind::full_shift) {
        j["hull"] = "full_shift";
        j["catalog"] = hull.name;
    } else {
        j["hull"] = hull.name;
    }
    j["alphabet"] = hull.alphabet.letters();
    j["values"] = hull.alphabet.values();
    j["domain"] = to_json(hull.group);
    return j;
}

Json to_json(const MinimalityCertificate& cert, const Alphabet& alphabet) {
    Json j;
    j["certified"] = cert.certified;
    j["n"] = cert.n;
    j["N"] = cert.big_n;
    j["legal_n_patterns"] = cert.legal_small;
    j["legal_N_patterns"] = cert.legal_big;
    j["recurrence_radius"] = cert.recurrence_radius;
    if (cert.witness) j["witness"] = to_json(*cert.witness, alphabet);
    Json missing = Json::array();
    for (const auto& p : cert.missing) missing.push_back(to_json(p, alphabet));
    j["missing"] = missing;
    if (cert.primitivity) {
        j["primitivity"] = {{"power", cert.primitivity->power}, {"matrix", matrix_json(cert.primitivity->matrix)}};
    }
    return j;
}

Json to_json(const PseudoergodicCertificate& cert, const Alphabet& alphabet) {
    Json j;
    j["status"] = status_name(cert.status);
    j["n"] = cert.n;
    j["radius"] = cert.radius;
    Json occ = Json::array();
    for (const auto& [pattern, g] : cert.occurrences)
        occ.push_back({{"pattern", pattern.to_string(alphabet)}, {"at", coords(g)}});
    j["occurrences"] = occ;
    Json missing = Json::array();
    for (const auto& p : cert.missing) missing.push_back(to_json(p, alphabet));
    j["missing"] = missing;
    return j;
}

Json to_json(const LimitOperatorProbe& probe, const Alphabet& alphabet) {
    Json j;
    Json terms = Json::array();
    for (const auto& g : probe.sequence.terms) terms.push_back(coords(g));
    j["sequence"] = terms;
    if (probe.sequence.direction) j["direction"] = *probe.sequence.direction;
    j["m"] = probe.m;
    j["observation_radius"] = probe.observation_radius;
    j["stabilized"] = probe.stabilized;
    if (probe.limit_pattern) j["limit_pattern"] = probe.limit_pattern->to_string(alphabet);
    Json trace = Json::array();
    for (double x : probe.convergence_trace) trace.push_back(number(x));
    j["convergence_trace"] = trace;
    Json norms = Json::array();
    for (double x : probe.translated_norms) norms.push_back(number(x));
    j["translated_norms"] = norms;
    return j;
}

Json to_json(const LimitSetSample& sample, const Alphabet& alphabet) {
    Json j;
    j["window"] = to_json(sample.window);
    Json probes = Json::array();
    for (const auto& p : sample.probes) {
        Json q;
        Json terms = Json::array();
        for (const auto& g : p.sequence.terms) terms.push_back(coords(g));
        q["sequence"] = terms;
        q["stabilized"] = p.stabilized;
        if (p.pattern) q["pattern"] = p.pattern->to_string(alphabet);
        if (p.direction) q["direction"] = *p.direction;
        probes.push_back(q);
    }
    j["probes"] = probes;
    Json patterns = Json::array();
    for (const auto& p : sample.patterns()) patterns.push_back(p.to_string(alphabet));
    j["patterns"] = patterns;
    return j;
}

Json to_json(const ConstancyReport& r) {
    Json j;
    j["hull"] = r.hull;
    j["scheme"] = r.scheme;
    j["configurations"] = r.configurations;
    j["window_sizes"] = r.window_sizes;
    j["boundary"] = to_string(r.boundary);
    j["persistence"] = {{"enabled", r.persistence.enabled},
                        {"enlargements", r.persistence.enlargements},
                        {"delta_constant", r.persistence.delta_constant}};
    if (r.grid) {
        j["grid"] = {{"window", to_json(r.grid->window)},
                     {"re", {r.grid->rectangle.re_min, r.grid->rectangle.re_max}},
                     {"im", {r.grid->rectangle.im_min, r.grid->rectangle.im_max}},
                     {"resolution", {r.grid->resolution.n_re, r.grid->resolution.n_im}},
                     {"cutoff", r.grid->cutoff},
                     {"epsilons", r.grid->epsilons}};
    }
    j["tolerances"] = {{"hausdorff", number(r.tolerances.hausdorff)},
                       {"grid", number(r.tolerances.grid)},
                       {"area_fraction", number(r.tolerances.area_fraction)}};
    j["hypothesis_verified"] = r.hypothesis_verified;
    j["hypothesis"] = r.hypothesis;
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json q;
        q["first"] = p.first;
        q["second"] = p.second;
        Json h = Json::array();
        for (double x : p.hausdorff) h.push_back(number(x));
        q["hausdorff"] = h;
        if (p.grid_deviation) q["grid_deviation"] = number(*p.grid_deviation);
        if (!p.area_differences.empty()) q["area_differences"] = p.area_differences;
        pairs.push_back(q);
    }
    j["pairs"] = pairs;
    Json sizes = Json::array();
    for (const auto& per_config : r.spectra) {
        Json row = Json::array();
        for (const auto& pts : per_config) row.push_back(pts.size());
        sizes.push_back(row);
    }
    j["compared_point_counts"] = sizes;
    j["monotone"] = r.monotone;
    j["within_tolerance"] = r.within_tolerance;
    j["pass"] = r.pass;
    return j;
}

Json to_json(const InclusionReport& r) {
    Json j;
    j["window"] = to_json(r.window);
    j["tolerance"] = number(r.tolerance);
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"probe", e.probe}, {"distance", number(e.distance)}, {"consistent", e.consistent}});
    j["entries"] = entries;
    j["all_consistent"] = r.all_consistent;
    return j;
}

std::string spectra_svg(const std::vector<std::vector<std::complex<double>>>& sets,
                        const std::vector<std::string>& labels) {
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
    bool first = true;
    for (const auto& s : sets)
        for (const auto& z : s) {
            if (first) {
                re_lo = re_hi = z.real();
                im_lo = im_hi = z.imag();
                first = false;
            }
            re_lo = std::min(re_lo, z.real());
            re_hi = std::max(re_hi, z.real());
            im_lo = std::min(im_lo, z.imag());
            im_hi = std::max(im_hi, z.imag());
        }
    const double pad = 0.05 * std::max({re_hi - re_lo, im_hi - im_lo, 1.0});
    re_lo -= pad, re_hi += pad, im_lo -= pad, im_hi += pad;
    const double size = 600.0;
    const double scale = size / std::max(re_hi - re_lo, im_hi - im_lo);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 20 * sets.size()
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const char* color = kPalette[k % std::size(kPalette)];
        for (const auto& z : sets[k])
            out << "<circle cx=\"" << (z.real() - re_lo) * scale << "\" cy=\"" << (im_hi - z.imag()) * scale
                << "\" r=\"2\" fill=\"" << color << "\" fill-opacity=\"0.6\"/>\n";
        out << "<text x=\"5\" y=\"" << size + 15 + 20 * k << "\" fill=\"" << color << "\" font-size=\"12\">"
            << (k < labels.size() ? labels[k] : std::to_string(k)) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string heatmap_svg(const PseudospectrumGrid& grid, const std::vector<double>& epsilons) {
    const std::size_t nr = grid.resolution.n_re;
    const std::size_t ni = grid.resolution.n_im;
    const double cell = std::max(2.0, 600.0 / static_cast<double>(std::max(nr, ni)));
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (double s : grid.sigma_min) {
        const double v = std::log10(std::max(s, 1e-16));
        if (first) lo = hi = v, first = false;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double range = hi > lo ? hi - lo : 1.0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cell * nr << "\" height=\"" << cell * ni
        << "\" shape-rendering=\"crispEdges\">\n";
    // Row j = 0 is the bottom of the rectangle.
    const auto y_of = [&](std::size_t j) { return (static_cast<double>(ni) - 1 - static_cast<double>(j)) * cell; };
    for (std::size_t j = 0; j < ni; ++j)
        for (std::size_t i = 0; i < nr; ++i) {
            const double v = std::log10(std::max(grid.at(i, j), 1e-16));
            out << "<rect x=\"" << i * cell << "\" y=\"" << y_of(j) << "\" width=\"" << cell << "\" height=\"" << cell
                << "\" fill=\"" << color_ramp((v - lo) / range) << "\"/>\n";
        }
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        const double eps = epsilons[k];
        const char* color = kPalette[k % std::size(kPalette)];
        out << "<g stroke=\"" << color << "\" stroke-width=\"1.5\">\n";
        for (std::size_t j = 0; j < ni; ++j)
            for (std::size_t i = 0; i < nr; ++i) {
                const bool in = grid.at(i, j) < eps;
                if (i + 1 < nr && in != (grid.at(i + 1, j) < eps)) {
                    const double x = (static_cast<double>(i) + 1) * cell;
                    out << "<line x1=\"" << x << "\" y1=\"" << y_of(j) << "\" x2=\"" << x << "\" y2=\""
                        << y_of(j) + cell << "\"/>\n";
                }
                if (j + 1 < ni && in != (grid.at(i, j + 1) < eps)) {
                    const double y = y_of(j);
                    out << "<line x1=\"" << i * cell << "\" y1=\"" << y << "\" x2=\"" << (i + 1) * cell << "\" y2=\""
                        << y << "\"/>\n";
                }
            }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace hullspec
