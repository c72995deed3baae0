#include "hullspec/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hullspec/error.hpp"

namespace hullspec {

namespace {

// ---- lexer -----------------------------------------------------------------

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    char get() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

    void skip_blanks() {
        while (peek() == ' ' || peek() == '\t') get();
    }

    void skip_comment() {
        if (peek() == '#')
            while (!eof() && peek() != '\n') get();
    }

    // Whitespace, newlines and comments (inside arrays).
    void skip_all() {
        for (;;) {
            skip_blanks();
            if (peek() == '#') {
                skip_comment();
            } else if (peek() == '\n' || peek() == '\r') {
                get();
            } else {
                return;
            }
        }
    }

    void end_of_line() {
        skip_blanks();
        skip_comment();
        if (peek() == '\r') get();
        if (eof()) return;
        if (peek() != '\n') fail("expected end of line");
        get();
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool bare_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

std::string parse_bare(Cursor& cur, bool dotted) {
    std::string out;
    while (bare_char(cur.peek()) || (dotted && cur.peek() == '.')) out += cur.get();
    if (out.empty()) cur.fail("expected a name");
    return out;
}

void append_utf8(std::string& out, unsigned code) {
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xC0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3F));
    } else {
        out += static_cast<char>(0xE0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
    }
}

std::string parse_string(Cursor& cur) {
    cur.get();  // opening quote
    std::string out;
    for (;;) {
        if (cur.eof() || cur.peek() == '\n') cur.fail("unterminated string");
        const char c = cur.get();
        if (c == '"') return out;
        if (c != '\\') {
            out += c;
            continue;
        }
        const char e = cur.eof() ? '\0' : cur.get();
        switch (e) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            case 'u': {
                std::string hex;
                for (int i = 0; i < 4; ++i) hex += cur.eof() ? '\0' : cur.get();
                unsigned code = 0;
                const auto res = std::from_chars(hex.data(), hex.data() + hex.size(), code, 16);
                if (res.ec != std::errc() || res.ptr != hex.data() + hex.size()) cur.fail("bad \\u escape");
                append_utf8(out, code);
                break;
            }
            default: cur.fail(std::string("unknown escape \\") + e);
        }
    }
}

TomlValue parse_value(Cursor& cur);

TomlValue parse_number(Cursor& cur) {
    TomlValue v{{}, cur.line(), cur.column()};
    std::string token;
    while (!cur.eof()) {
        const char c = cur.peek();
        if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.' || c == 'e' || c == 'E' || c == '_') {
            cur.get();
            if (c != '_') token += c;
        } else {
            break;
        }
    }
    if (token.empty()) cur.fail("expected a value");
    const bool is_float = token.find_first_of(".eE") != std::string::npos;
    const char* first = token.data() + (token[0] == '+' ? 1 : 0);
    const char* last = token.data() + token.size();
    if (is_float) {
        double x = 0.0;
        const auto res = std::from_chars(first, last, x);
        if (res.ec != std::errc() || res.ptr != last) throw ParseError(v.line, v.column, "malformed float '" + token + "'");
        v.data = x;
    } else {
        std::int64_t x = 0;
        const auto res = std::from_chars(first, last, x);
        if (res.ec != std::errc() || res.ptr != last)
            throw ParseError(v.line, v.column, "malformed integer '" + token + "'");
        v.data = x;
    }
    return v;
}

TomlValue parse_value(Cursor& cur) {
    const std::size_t line = cur.line();
    const std::size_t column = cur.column();
    const char c = cur.peek();
    if (c == '"') return TomlValue{parse_string(cur), line, column};
    if (c == '[') {
        cur.get();
        TomlArray items;
        for (;;) {
            cur.skip_all();
            if (cur.peek() == ']') {
                cur.get();
                break;
            }
            items.push_back(parse_value(cur));
            cur.skip_all();
            if (cur.peek() == ',') {
                cur.get();
            } else if (cur.peek() == ']') {
                cur.get();
                break;
            } else {
                cur.fail("expected ',' or ']' in array");
            }
        }
        return TomlValue{std::move(items), line, column};
    }
    if (c == 't' || c == 'f') {
        const std::string word = parse_bare(cur, false);
        if (word == "true") return TomlValue{true, line, column};
        if (word == "false") return TomlValue{false, line, column};
        throw ParseError(line, column, "unexpected '" + word + "'");
    }
    if (c == '{') cur.fail("inline tables are not supported");
    return parse_number(cur);
}

// ---- typed access ----------------------------------------------------------

[[noreturn]] void type_error(const TomlValue& v, const std::string& key, const std::string& expected) {
    throw ParseError(v.line, v.column, "'" + key + "' must be " + expected);
}

std::string as_string(const TomlValue& v, const std::string& key) {
    if (const auto* s = std::get_if<std::string>(&v.data)) return *s;
    type_error(v, key, "a string");
}

bool as_bool(const TomlValue& v, const std::string& key) {
    if (const auto* b = std::get_if<bool>(&v.data)) return *b;
    type_error(v, key, "a boolean");
}

std::int64_t as_int(const TomlValue& v, const std::string& key) {
    if (const auto* i = std::get_if<std::int64_t>(&v.data)) return *i;
    type_error(v, key, "an integer");
}

std::size_t as_size(const TomlValue& v, const std::string& key) {
    const std::int64_t i = as_int(v, key);
    if (i < 0) type_error(v, key, "a nonnegative integer");
    return static_cast<std::size_t>(i);
}

double as_double(const TomlValue& v, const std::string& key) {
    if (const auto* d = std::get_if<double>(&v.data)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&v.data)) return static_cast<double>(*i);
    type_error(v, key, "a number");
}

const TomlArray& as_array(const TomlValue& v, const std::string& key) {
    if (const auto* a = std::get_if<TomlArray>(&v.data)) return *a;
    type_error(v, key, "an array");
}

std::vector<double> as_doubles(const TomlValue& v, const std::string& key) {
    std::vector<double> out;
    for (const auto& x : as_array(v, key)) out.push_back(as_double(x, key));
    return out;
}

std::vector<std::int64_t> as_ints(const TomlValue& v, const std::string& key) {
    std::vector<std::int64_t> out;
    for (const auto& x : as_array(v, key)) out.push_back(as_int(x, key));
    return out;
}

std::vector<std::size_t> as_sizes(const TomlValue& v, const std::string& key) {
    std::vector<std::size_t> out;
    for (const auto& x : as_array(v, key)) out.push_back(as_size(x, key));
    return out;
}

std::pair<double, double> as_range(const TomlValue& v, const std::string& key) {
    const auto xs = as_doubles(v, key);
    if (xs.size() != 2) type_error(v, key, "a two-element array");
    return {xs[0], xs[1]};
}

/// Dispatches each entry of a section to a handler; unknown keys are errors.
template <typename Handler>
void read_section(const TomlSection& section, Handler&& handle) {
    for (const auto& entry : section.entries) {
        if (!handle(entry.key, entry.value)) {
            const std::string where = section.name.empty() ? "top level" : "[" + section.name + "]";
            throw ParseError(entry.value.line, entry.value.column, "unknown key '" + entry.key + "' at " + where);
        }
    }
}

WindowSpec read_window(const TomlSection& section) {
    WindowSpec w;
    read_section(section, [&](const std::string& k, const TomlValue& v) {
        if (k == "radius") w.radius = as_size(v, k);
        else if (k == "lower") w.lower = as_ints(v, k);
        else if (k == "upper") w.upper = as_ints(v, k);
        else if (k == "halfwidths") {
            w.upper = as_ints(v, k);
            w.lower.clear();
            for (auto x : w.upper) w.lower.push_back(-x);
        } else return false;
        return true;
    });
    const bool is_box = !w.lower.empty() || !w.upper.empty();
    if (w.radius.has_value() == is_box || w.lower.size() != w.upper.size())
        throw ParseError(section.line, 1, "[" + section.name + "] needs either radius or matching lower/upper");
    return w;
}

} // namespace

std::vector<TomlSection> parse_toml(const std::string& text) {
    Cursor cur(text);
    std::vector<TomlSection> sections{TomlSection{"", false, 1, {}}};
    std::set<std::string> tables;
    while (true) {
        cur.skip_blanks();
        if (cur.eof()) break;
        const char c = cur.peek();
        if (c == '#' || c == '\n' || c == '\r') {
            cur.end_of_line();
            continue;
        }
        if (c == '[') {
            const std::size_t line = cur.line();
            cur.get();
            const bool array = cur.peek() == '[';
            if (array) cur.get();
            cur.skip_blanks();
            const std::size_t column = cur.column();
            const std::string name = parse_bare(cur, true);
            cur.skip_blanks();
            if (cur.peek() != ']') cur.fail("expected ']'");
            cur.get();
            if (array) {
                if (cur.peek() != ']') cur.fail("expected ']]'");
                cur.get();
            }
            if (!array && !tables.insert(name).second) throw ParseError(line, column, "table [" + name + "] defined twice");
            sections.push_back(TomlSection{name, array, line, {}});
            cur.end_of_line();
            continue;
        }
        const std::size_t line = cur.line();
        const std::size_t column = cur.column();
        std::string key;
        if (c == '"') {
            key = parse_string(cur);
        } else {
            key = parse_bare(cur, false);
        }
        cur.skip_blanks();
        if (cur.peek() != '=') cur.fail("expected '=' after key '" + key + "'");
        cur.get();
        cur.skip_blanks();
        TomlValue value = parse_value(cur);
        auto& entries = sections.back().entries;
        for (const auto& e : entries)
            if (e.key == key) throw ParseError(line, column, "duplicate key '" + key + "'");
        entries.push_back(TomlEntry{key, std::move(value)});
        cur.end_of_line();
    }
    return sections;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    bool have_scheme = false;
    bool have_hull = false;
    for (const auto& section : parse_toml(text)) {
        const std::string& name = section.name;
        if (name.empty()) {
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "boundary") {
                    try {
                        cfg.boundary = boundary_from_string(as_string(v, k));
                    } catch (const DomainError& e) {
                        throw ParseError(v.line, v.column, e.what());
                    }
                } else if (k == "epsilons") cfg.epsilons = as_doubles(v, k);
                else if (k == "floquet_theta") cfg.floquet_theta = as_size(v, k);
                else if (k == "tolerance_file") cfg.tolerance_file = as_string(v, k);
                else if (k == "tolerance_key") cfg.tolerance_key = as_string(v, k);
                else if (k == "output_dir") cfg.output_dir = as_string(v, k);
                else if (k == "threads") cfg.threads = as_size(v, k);
                else return false;
                return true;
            });
        } else if (name == "scheme" && !section.array) {
            have_scheme = true;
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "name") cfg.scheme.name = as_string(v, k);
                else if (k == "block_dim") cfg.scheme.block_dim = as_size(v, k);
                else if (k == "letter_values") cfg.scheme.letter_values = as_doubles(v, k);
                else return false;
                return true;
            });
        } else if (name == "hull" && !section.array) {
            have_hull = true;
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "name") cfg.hull.name = as_string(v, k);
                else if (k == "group") cfg.hull.group = as_string(v, k);
                else if (k == "rank") cfg.hull.rank = as_size(v, k);
                else if (k == "q") cfg.hull.q = as_size(v, k);
                else return false;
                return true;
            });
        } else if (name == "configuration" && section.array) {
            ConfigurationSpec spec;
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "rule") spec.rule = as_string(v, k);
                else if (k == "seed") spec.seed = static_cast<std::uint64_t>(as_int(v, k));
                else if (k == "letter") spec.letter = as_string(v, k);
                else if (k == "shift") spec.shift = as_ints(v, k);
                else return false;
                return true;
            });
            cfg.configurations.push_back(std::move(spec));
        } else if (name == "window" && section.array) {
            cfg.windows.push_back(read_window(section));
        } else if (name == "grid" && !section.array) {
            if (!cfg.grid) cfg.grid = GridConfig{};
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "re") std::tie(cfg.grid->re_min, cfg.grid->re_max) = as_range(v, k);
                else if (k == "im") std::tie(cfg.grid->im_min, cfg.grid->im_max) = as_range(v, k);
                else if (k == "resolution") {
                    const auto r = as_sizes(v, k);
                    if (r.size() != 2) type_error(v, k, "a two-element array");
                    cfg.grid->n_re = r[0];
                    cfg.grid->n_im = r[1];
                } else if (k == "cutoff") cfg.grid->cutoff = as_double(v, k);
                else return false;
                return true;
            });
        } else if (name == "grid.window" && !section.array) {
            if (!cfg.grid) cfg.grid = GridConfig{};
            cfg.grid->window = read_window(section);
        } else if (name == "persistence" && !section.array) {
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "enabled") cfg.persistence.enabled = as_bool(v, k);
                else if (k == "enlargements") cfg.persistence.enlargements = as_sizes(v, k);
                else if (k == "delta_constant") cfg.persistence.delta_constant = as_double(v, k);
                else return false;
                return true;
            });
        } else if (name == "certification" && !section.array) {
            CertificationConfig c;
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "n") c.n = as_size(v, k);
                else if (k == "big_n") c.big_n = as_size(v, k);
                else if (k == "radius") c.radius = as_size(v, k);
                else if (k == "expect_minimal") c.expect_minimal = as_bool(v, k);
                else return false;
                return true;
            });
            cfg.certification = c;
        } else if (name == "limits" && !section.array) {
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "m") cfg.limits.m = as_size(v, k);
                else if (k == "agree") cfg.limits.agree = as_size(v, k);
                else return false;
                return true;
            });
        } else if (name == "sequence" && section.array) {
            SequenceConfig s;
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "kind") s.kind = as_string(v, k);
                else if (k == "start") s.start = as_ints(v, k);
                else if (k == "step") s.step = as_ints(v, k);
                else if (k == "count") s.count = as_size(v, k);
                else if (k == "direction") s.direction = as_doubles(v, k);
                else if (k == "min_length") s.min_length = as_size(v, k);
                else if (k == "search_radius") s.search_radius = as_size(v, k);
                else if (k == "max_patterns") s.max_patterns = as_size(v, k);
                else return false;
                return true;
            });
            if (s.kind != "arithmetic" && s.kind != "occurrence")
                throw ParseError(section.line, 1, "sequence kind must be arithmetic or occurrence");
            cfg.sequences.push_back(std::move(s));
        } else if (name == "tolerances" && !section.array) {
            read_section(section, [&](const std::string& k, const TomlValue& v) {
                if (k == "hausdorff") cfg.tolerances.hausdorff = as_double(v, k);
                else if (k == "grid") cfg.tolerances.grid = as_double(v, k);
                else if (k == "area_fraction") cfg.tolerances.area_fraction = as_double(v, k);
                else if (k == "inclusion") cfg.tolerances.inclusion = as_double(v, k);
                else if (k == "floquet") cfg.tolerances.floquet = as_double(v, k);
                else return false;
                return true;
            });
        } else {
            throw ParseError(section.line, 1,
                             "unknown table " + std::string(section.array ? "[[" : "[") + name +
                                 (section.array ? "]]" : "]"));
        }
    }
    if (!have_scheme || cfg.scheme.name.empty()) throw ParseError(1, 1, "missing [scheme] name");
    if (!have_hull || cfg.hull.name.empty()) throw ParseError(1, 1, "missing [hull] name");
    if (cfg.grid && (cfg.grid->n_re == 0 || cfg.grid->n_im == 0))
        throw ParseError(1, 1, "[grid] needs a positive resolution");
    if (cfg.grid && !cfg.grid->window.radius && cfg.grid->window.lower.empty())
        throw ParseError(1, 1, "[grid] needs a [grid.window]");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

template <typename T, typename F>
std::string list(const std::vector<T>& xs, F&& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + f(xs[i]);
    return out + "]";
}

std::string ints(const std::vector<std::int64_t>& xs) {
    return list(xs, [](std::int64_t x) { return std::to_string(x); });
}

std::string doubles(const std::vector<double>& xs) { return list(xs, fmt); }

void write_window(std::ostringstream& out, const WindowSpec& w) {
    if (w.radius) {
        out << "radius = " << *w.radius << "\n";
    } else {
        out << "lower = " << ints(w.lower) << "\nupper = " << ints(w.upper) << "\n";
    }
}

} // namespace

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "boundary = " << quote(to_string(c.boundary)) << "\n";
    out << "epsilons = " << doubles(c.epsilons) << "\n";
    out << "floquet_theta = " << c.floquet_theta << "\n";
    out << "tolerance_file = " << quote(c.tolerance_file) << "\n";
    out << "tolerance_key = " << quote(c.tolerance_key) << "\n";
    out << "output_dir = " << quote(c.output_dir) << "\n";
    out << "threads = " << c.threads << "\n";

    out << "\n[scheme]\nname = " << quote(c.scheme.name) << "\nblock_dim = " << c.scheme.block_dim << "\n";
    if (c.scheme.letter_values) out << "letter_values = " << doubles(*c.scheme.letter_values) << "\n";

    out << "\n[hull]\nname = " << quote(c.hull.name) << "\ngroup = " << quote(c.hull.group)
        << "\nrank = " << c.hull.rank << "\nq = " << c.hull.q << "\n";

    for (const auto& s : c.configurations) {
        out << "\n[[configuration]]\nrule = " << quote(s.rule) << "\n";
        if (s.seed) out << "seed = " << static_cast<std::int64_t>(*s.seed) << "\n";
        if (s.letter) out << "letter = " << quote(*s.letter) << "\n";
        if (!s.shift.empty()) out << "shift = " << ints(s.shift) << "\n";
    }
    for (const auto& w : c.windows) {
        out << "\n[[window]]\n";
        write_window(out, w);
    }
    if (c.grid) {
        const auto& g = *c.grid;
        out << "\n[grid]\nre = " << doubles({g.re_min, g.re_max}) << "\nim = " << doubles({g.im_min, g.im_max})
            << "\nresolution = [" << g.n_re << ", " << g.n_im << "]\ncutoff = " << fmt(g.cutoff) << "\n";
        out << "\n[grid.window]\n";
        write_window(out, g.window);
    }
    out << "\n[persistence]\nenabled = " << (c.persistence.enabled ? "true" : "false") << "\nenlargements = "
        << list(c.persistence.enlargements, [](std::size_t x) { return std::to_string(x); })
        << "\ndelta_constant = " << fmt(c.persistence.delta_constant) << "\n";
    if (c.certification) {
        const auto& k = *c.certification;
        out << "\n[certification]\nn = " << k.n << "\nbig_n = " << k.big_n << "\nradius = " << k.radius
            << "\nexpect_minimal = " << (k.expect_minimal ? "true" : "false") << "\n";
    }
    out << "\n[limits]\nm = " << c.limits.m << "\nagree = " << c.limits.agree << "\n";
    for (const auto& s : c.sequences) {
        out << "\n[[sequence]]\nkind = " << quote(s.kind) << "\nstart = " << ints(s.start) << "\nstep = "
            << ints(s.step) << "\ncount = " << s.count << "\n";
        if (s.direction) out << "direction = " << doubles(*s.direction) << "\n";
        out << "min_length = " << s.min_length << "\nsearch_radius = " << s.search_radius
            << "\nmax_patterns = " << s.max_patterns << "\n";
    }
    const auto& t = c.tolerances;
    if (t.hausdorff || t.grid || t.area_fraction || t.inclusion || t.floquet) {
        out << "\n[tolerances]\n";
        if (t.hausdorff) out << "hausdorff = " << fmt(*t.hausdorff) << "\n";
        if (t.grid) out << "grid = " << fmt(*t.grid) << "\n";
        if (t.area_fraction) out << "area_fraction = " << fmt(*t.area_fraction) << "\n";
        if (t.inclusion) out << "inclusion = " << fmt(*t.inclusion) << "\n";
        if (t.floquet) out << "floquet = " << fmt(*t.floquet) << "\n";
    }
    return out.str();
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    const auto same_configs = [](const std::vector<ConfigurationSpec>& x, const std::vector<ConfigurationSpec>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].rule != y[i].rule || x[i].seed != y[i].seed || x[i].letter != y[i].letter ||
                x[i].shift != y[i].shift)
                return false;
        return true;
    };
    const auto same_persistence = [](const PersistenceOptions& x, const PersistenceOptions& y) {
        return x.enabled == y.enabled && x.enlargements == y.enlargements && x.delta_constant == y.delta_constant;
    };
    return a.scheme == b.scheme && a.hull == b.hull && same_configs(a.configurations, b.configurations) &&
           a.windows == b.windows && a.boundary == b.boundary && a.grid == b.grid && a.epsilons == b.epsilons &&
           same_persistence(a.persistence, b.persistence) && a.certification == b.certification &&
           a.limits == b.limits && a.sequences == b.sequences && a.floquet_theta == b.floquet_theta &&
           a.tolerance_file == b.tolerance_file && a.tolerance_key == b.tolerance_key &&
           a.tolerances == b.tolerances && a.output_dir == b.output_dir && a.threads == b.threads;
}

Window make_window(const GroupSpec& group, const WindowSpec& spec) {
    if (spec.radius) return Window::ball(group, *spec.radius);
    return Window::box(group, spec.lower, spec.upper);
}

HullParams hull_params(const ExperimentConfig& config) {
    HullParams p;
    p.q = config.hull.q;
    p.rank = config.hull.rank;
    if (config.hull.group == "heisenberg") {
        p.heisenberg = true;
    } else if (config.hull.group != "lattice") {
        throw DomainError("hull group must be lattice or heisenberg, got '" + config.hull.group + "'");
    }
    p.letter_values = config.scheme.letter_values;
    return p;
}

} // namespace hullspec
