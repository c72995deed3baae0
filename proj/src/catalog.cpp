#include "hullspec/catalog.hpp"

#include <algorithm>

#include "hullspec/error.hpp"

namespace hullspec {

namespace {

Block path_adjacency(std::size_t d) {
    Block t = Block::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        t(k, k + 1) = 1.0;
        t(k + 1, k) = 1.0;
    }
    return t;
}

Block identity_block(std::size_t d) {
    return Block::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

// Identity first, then generators, then their inverses.
std::vector<GroupElement> with_identity(const GroupSpec& group) {
    std::vector<GroupElement> out{group.identity()};
    for (const auto& s : group.symmetric_generators()) out.push_back(s);
    return out;
}

CoefficientScheme free_laplacian(const GroupSpec& group, const Alphabet& alphabet, std::size_t d) {
    const Block off = identity_block(d);
    const Block zero = Block::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    return CoefficientScheme("free_laplacian", group, alphabet, with_identity(group), 0, d,
                             [off, zero](std::size_t s, const Pattern&) { return s == 0 ? zero : off; });
}

// Diagonal: value of the letter at the origin (plus the path adjacency
// inside the block when d > 1). Hopping to each generator neighbour: I_d.
CoefficientScheme jacobi(std::string name, const GroupSpec& group, const Alphabet& alphabet, std::size_t d) {
    const Block off = identity_block(d);
    const Block inner = path_adjacency(d);
    const GroupElement origin = group.identity();
    return CoefficientScheme(std::move(name), group, alphabet, with_identity(group), 0, d,
                             [off, inner, alphabet, origin](std::size_t s, const Pattern& local) -> Block {
                                 if (s != 0) return off;
                                 return alphabet.value(local.at(origin)) * off + inner;
                             });
}

// Row k couples to k + g with weight 1 and to k - g with the letter value at
// k, for each generator g.
CoefficientScheme feinberg_zee(const GroupSpec& group, const Alphabet& alphabet, std::size_t d) {
    const std::vector<GroupElement> offsets = group.symmetric_generators();
    const std::size_t forward = group.generators().size();
    const Block off = identity_block(d);
    const GroupElement origin = group.identity();
    return CoefficientScheme("feinberg_zee", group, alphabet, offsets, 0, d,
                             [off, forward, alphabet, origin](std::size_t s, const Pattern& local) -> Block {
                                 if (s < forward) return off;
                                 return alphabet.value(local.at(origin)) * off;
                             });
}

// Weighted adjacency with edge weight 1 + (v(x) + v(y)) / 2 on the edge
// {x, y}; symmetric, so every section is Hermitian.
CoefficientScheme weighted_adjacency(const GroupSpec& group, const Alphabet& alphabet, std::size_t d) {
    const std::vector<GroupElement> offsets = group.symmetric_generators();
    const Block off = identity_block(d);
    const GroupElement origin = group.identity();
    return CoefficientScheme("heisenberg_adjacency", group, alphabet, offsets, 1, d,
                             [off, offsets, alphabet, origin](std::size_t s, const Pattern& local) -> Block {
                                 const double w = 1.0 + 0.5 * (alphabet.value(local.at(origin)) +
                                                               alphabet.value(local.at(offsets[s])));
                                 return w * off;
                             });
}

CoefficientScheme identity_scheme(const GroupSpec& group, const Alphabet& alphabet, std::size_t d) {
    const Block one = identity_block(d);
    return CoefficientScheme("identity", group, alphabet, {group.identity()}, 0, d,
                             [one](std::size_t, const Pattern&) { return one; });
}

Alphabet make_alphabet(const HullParams& params, std::vector<std::string> names, std::vector<double> values) {
    if (params.letter_values) {
        if (params.letter_values->size() != names.size())
            throw DomainError("expected " + std::to_string(names.size()) + " letter values");
        values = *params.letter_values;
    }
    return Alphabet(std::move(names), std::move(values));
}

} // namespace

GroupElement element_from(const GroupSpec& group, const std::vector<std::int64_t>& coords) {
    if (coords.size() != group.rank())
        throw DomainError("shift has " + std::to_string(coords.size()) + " coordinates, " + group.name() +
                          " needs " + std::to_string(group.rank()));
    if (group.is_lattice()) return GroupElement::lattice(coords);
    return GroupElement::heisenberg(coords[0], coords[1], coords[2]);
}

const std::vector<std::string>& scheme_names() {
    static const std::vector<std::string> names{"free_laplacian", "fibonacci_jacobi", "period_q_jacobi",
                                                "feinberg_zee", "heisenberg_adjacency", "identity"};
    return names;
}

CoefficientScheme make_scheme(const std::string& name, const GroupSpec& group, const Alphabet& alphabet,
                              std::size_t block_dim) {
    if (block_dim == 0) throw DomainError("block dimension must be positive");
    if (name == "free_laplacian") return free_laplacian(group, alphabet, block_dim);
    if (name == "fibonacci_jacobi" || name == "period_q_jacobi") return jacobi(name, group, alphabet, block_dim);
    if (name == "feinberg_zee") return feinberg_zee(group, alphabet, block_dim);
    if (name == "heisenberg_adjacency") return weighted_adjacency(group, alphabet, block_dim);
    if (name == "identity") return identity_scheme(group, alphabet, block_dim);
    throw DomainError("unknown scheme '" + name + "'");
}

Substitution fibonacci_substitution() { return Substitution(2, {{0, 1}, {0}}); }
Substitution thue_morse_substitution() { return Substitution(2, {{0, 1}, {1, 0}}); }

const std::vector<std::string>& hull_names() {
    static const std::vector<std::string> names{"fibonacci", "thue_morse", "period_q", "full_pm1", "halfplane_ab"};
    return names;
}

Hull make_hull(const std::string& name, const HullParams& params) {
    if (name == "fibonacci" || name == "thue_morse") {
        const Alphabet alphabet = make_alphabet(params, {"a", "b"}, {0.0, 1.0});
        const bool fib = name == "fibonacci";
        const Substitution sub = fib ? fibonacci_substitution() : thue_morse_substitution();
        // Fibonacci: a.a is legal and fixed by the square; Thue-Morse: b.a.
        const Letter left = fib ? 0 : 1;
        return Hull{name, GroupSpec::lattice(1), alphabet, SubshiftSpec::substitution_hull(alphabet, sub),
                    Configuration::fixed_point(alphabet, sub, 0, left)};
    }
    if (name == "period_q") {
        if (params.q == 0 || params.q > 26) throw DomainError("period_q needs 1 <= q <= 26");
        if (params.rank == 0) throw DomainError("lattice rank must be positive");
        std::vector<std::string> names;
        std::vector<double> values;
        for (std::size_t j = 0; j < params.q; ++j) {
            names.emplace_back(1, static_cast<char>('a' + j));
            values.push_back(static_cast<double>(j));
        }
        const Alphabet alphabet = make_alphabet(params, names, values);
        const GroupSpec group = GroupSpec::lattice(params.rank);
        const auto q = static_cast<std::int64_t>(params.q);
        // Letter at x is (x_1 + ... + x_N) mod q.
        std::size_t cells = 1;
        for (std::size_t i = 0; i < params.rank; ++i) cells *= params.q;
        std::vector<Letter> fundamental(cells);
        for (std::size_t idx = 0; idx < cells; ++idx) {
            std::size_t rest = idx;
            std::size_t sum = 0;
            for (std::size_t i = 0; i < params.rank; ++i) {
                sum += rest % params.q;
                rest /= params.q;
            }
            fundamental[idx] = static_cast<Letter>(sum % params.q);
        }
        const Configuration reference = Configuration::periodic(
            group, alphabet, std::vector<std::int64_t>(params.rank, q), std::move(fundamental));
        return Hull{name, group, alphabet, SubshiftSpec::periodic_hull(reference), reference};
    }
    if (name == "full_pm1") {
        const Alphabet alphabet = make_alphabet(params, {"-1", "1"}, {-1.0, 1.0});
        const GroupSpec group = params.heisenberg ? GroupSpec::heisenberg() : GroupSpec::lattice(params.rank);
        return Hull{name, group, alphabet, SubshiftSpec::full_shift(group, alphabet),
                    Configuration::explicit_random(group, alphabet, 0)};
    }
    if (name == "halfplane_ab") {
        const Alphabet alphabet = make_alphabet(params, {"a", "b"}, {0.0, 1.0});
        const GroupSpec group = GroupSpec::lattice(2);
        const auto pair = [&](std::vector<std::int64_t> step, Letter first, Letter second) {
            const Window w = Window::from_elements(
                group, {GroupElement::lattice({0, 0}), GroupElement::lattice(std::move(step))});
            return Pattern{w, {first, second}};
        };
        // Closure of the translates of {a on x >= 0, b on x < 0}: columns are
        // constant and a column of a is never followed by one of b.
        std::vector<Pattern> forbidden{pair({1, 0}, 0, 1), pair({0, 1}, 0, 1), pair({0, 1}, 1, 0)};
        return Hull{name, group, alphabet, SubshiftSpec::forbidden_patterns(group, alphabet, std::move(forbidden)),
                    Configuration::halfspace(group, alphabet, 0, 0, 1)};
    }
    throw DomainError("unknown hull '" + name + "'");
}

Configuration realize(const Hull& hull, const ConfigurationSpec& spec) {
    Configuration base = hull.reference;
    if (spec.rule == "reference") {
    } else if (spec.rule == "explicit") {
        if (hull.subshift.kind() != SubshiftKind::full_shift)
            throw DomainError("explicit random configurations belong to full shifts only, not '" + hull.name + "'");
        base = Configuration::explicit_random(hull.group, hull.alphabet, spec.seed.value_or(0));
    } else if (spec.rule == "constant") {
        if (!spec.letter) throw DomainError("constant rule needs a letter");
        const Letter a = hull.alphabet.letter(*spec.letter);
        base = Configuration::constant(hull.group, hull.alphabet, a);
        const Window probe = Window::ball(hull.group, 2);
        if (!hull.subshift.is_legal(restrict_to(base, probe)))
            throw DomainError("constant '" + *spec.letter + "' is not a point of '" + hull.name + "'");
    } else {
        throw DomainError("unknown configuration rule '" + spec.rule + "'");
    }
    if (spec.shift.empty()) return base;
    return shift(base, element_from(hull.group, spec.shift));
}

} // namespace hullspec
