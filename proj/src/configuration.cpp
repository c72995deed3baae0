#include "hullspec/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <variant>

#include "hullspec/error.hpp"

namespace hullspec {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t position_hash(std::uint64_t seed, const GroupElement& g) noexcept {
    std::uint64_t state = mix64(seed ^ (static_cast<std::uint64_t>(g.kind()) << 56));
    for (std::size_t i = 0; i < g.size(); ++i)
        state = mix64(state ^ mix64(static_cast<std::uint64_t>(g[i]) + 0x632be59bd9b4e019ULL * (i + 1)));
    return state;
}

namespace detail {

struct PeriodicRule {
    std::vector<std::int64_t> periods;
    std::vector<Letter> fundamental;
};

struct FixedPointRule {
    Substitution substitution;
    Letter right_seed;
    Letter left_seed;
    std::size_t power;
    // lengths[n][x] = |image^n(x)|, saturating.
    std::vector<std::vector<std::uint64_t>> lengths;
};

struct ExplicitRule {
    std::uint64_t seed;
};

struct HalfspaceRule {
    std::size_t axis;
    Letter nonnegative;
    Letter negative;
};

struct PatchedRule {
    std::shared_ptr<const ConfigurationNode> base;
    std::map<GroupElement, Letter> overrides;
};

struct ShiftedRule {
    std::shared_ptr<const ConfigurationNode> base;
    GroupElement offset;
};

using Rule = std::variant<PeriodicRule, FixedPointRule, ExplicitRule, HalfspaceRule, PatchedRule, ShiftedRule>;

struct ConfigurationNode {
    GroupSpec group;
    Alphabet alphabet;
    Rule rule;
};

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Letter at offset `pos` (0-based) of image^n(x), descending through the
// substitution tree.
Letter descend(const FixedPointRule& rule, Letter x, std::size_t n, std::uint64_t pos) {
    for (std::size_t level = n; level > 0; --level) {
        for (Letter y : rule.substitution.image(x)) {
            const std::uint64_t len = rule.lengths[level - 1][y];
            if (pos < len) {
                x = y;
                break;
            }
            pos -= len;
        }
    }
    return x;
}

Letter evaluate_fixed_point(const FixedPointRule& rule, std::int64_t k) {
    const bool right = k >= 0;
    const Letter seed = right ? rule.right_seed : rule.left_seed;
    const std::uint64_t offset = right ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-(k + 1));
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 61;
    if (offset >= kLimit) throw ExtendPrefix(static_cast<std::size_t>(offset) + 1);
    std::size_t n = 0;
    while (rule.lengths[n][seed] <= offset) {
        n += rule.power;
        if (n >= rule.lengths.size()) throw ExtendPrefix(static_cast<std::size_t>(offset) + 1);
    }
    if (right) return descend(rule, seed, n, offset);
    return descend(rule, seed, n, rule.lengths[n][seed] - 1 - offset);
}

Letter evaluate_node(const ConfigurationNode& node, const GroupElement& g) {
    return std::visit(
        [&](const auto& rule) -> Letter {
            using R = std::decay_t<decltype(rule)>;
            if constexpr (std::is_same_v<R, PeriodicRule>) {
                std::size_t index = 0;
                for (std::size_t i = 0; i < rule.periods.size(); ++i)
                    index = index * static_cast<std::size_t>(rule.periods[i]) +
                            static_cast<std::size_t>(floor_mod(g[i], rule.periods[i]));
                return rule.fundamental[index];
            } else if constexpr (std::is_same_v<R, FixedPointRule>) {
                return evaluate_fixed_point(rule, g[0]);
            } else if constexpr (std::is_same_v<R, ExplicitRule>) {
                const std::uint64_t h = position_hash(rule.seed, g);
                return static_cast<Letter>((h >> 32) % node.alphabet.size());
            } else if constexpr (std::is_same_v<R, HalfspaceRule>) {
                return g[rule.axis] >= 0 ? rule.nonnegative : rule.negative;
            } else if constexpr (std::is_same_v<R, PatchedRule>) {
                if (auto it = rule.overrides.find(g); it != rule.overrides.end()) return it->second;
                return evaluate_node(*rule.base, g);
            } else {
                return evaluate_node(*rule.base, compose(g, rule.offset));
            }
        },
        node.rule);
}

std::string describe_node(const ConfigurationNode& node) {
    return std::visit(
        [&](const auto& rule) -> std::string {
            using R = std::decay_t<decltype(rule)>;
            std::ostringstream out;
            if constexpr (std::is_same_v<R, PeriodicRule>) {
                out << "periodic[";
                for (std::size_t i = 0; i < rule.periods.size(); ++i) out << (i ? "x" : "") << rule.periods[i];
                out << "](";
                for (Letter a : rule.fundamental) out << node.alphabet.name(a);
                out << ")";
            } else if constexpr (std::is_same_v<R, FixedPointRule>) {
                out << "fixed_point(" << node.alphabet.name(rule.left_seed) << "." << node.alphabet.name(rule.right_seed)
                    << ")";
            } else if constexpr (std::is_same_v<R, ExplicitRule>) {
                out << "explicit(seed=" << rule.seed << ")";
            } else if constexpr (std::is_same_v<R, HalfspaceRule>) {
                out << "halfspace(axis=" << rule.axis << "," << node.alphabet.name(rule.nonnegative) << "|"
                    << node.alphabet.name(rule.negative) << ")";
            } else if constexpr (std::is_same_v<R, PatchedRule>) {
                out << "patched(" << describe_node(*rule.base) << ",overrides=" << rule.overrides.size() << ")";
            } else {
                out << "shift(" << describe_node(*rule.base) << "," << rule.offset.to_string() << ")";
            }
            return out.str();
        },
        node.rule);
}

std::optional<std::vector<std::int64_t>> node_periods(const ConfigurationNode& node) {
    if (const auto* p = std::get_if<PeriodicRule>(&node.rule)) return p->periods;
    if (const auto* s = std::get_if<ShiftedRule>(&node.rule)) return node_periods(*s->base);
    return std::nullopt;
}

} // namespace
} // namespace detail

using detail::ConfigurationNode;

Configuration Configuration::periodic(GroupSpec group, Alphabet alphabet, std::vector<std::int64_t> periods,
                                      std::vector<Letter> fundamental) {
    if (!group.is_lattice()) throw DomainError("periodic configurations need a lattice group");
    if (periods.size() != group.rank()) throw DomainError("one period per axis required");
    std::size_t cells = 1;
    for (auto p : periods) {
        if (p <= 0) throw DomainError("periods must be positive");
        cells *= static_cast<std::size_t>(p);
    }
    if (fundamental.size() != cells) throw DomainError("fundamental pattern size does not match the periods");
    for (Letter a : fundamental)
        if (a >= alphabet.size()) throw DomainError("letter outside alphabet");
    return Configuration(std::make_shared<const ConfigurationNode>(
        ConfigurationNode{std::move(group), std::move(alphabet),
                          detail::PeriodicRule{std::move(periods), std::move(fundamental)}}));
}

Configuration Configuration::constant(GroupSpec group, Alphabet alphabet, Letter letter) {
    if (group.is_lattice()) {
        std::vector<std::int64_t> ones(group.rank(), 1);
        return periodic(std::move(group), std::move(alphabet), std::move(ones), {letter});
    }
    if (letter >= alphabet.size()) throw DomainError("letter outside alphabet");
    // Off the lattice a constant is an override-free patch of itself; a
    // halfspace with equal letters on axis 0 is the simplest exact rule.
    return Configuration(std::make_shared<const ConfigurationNode>(
        ConfigurationNode{std::move(group), std::move(alphabet), detail::HalfspaceRule{0, letter, letter}}));
}

Configuration Configuration::fixed_point(Alphabet alphabet, Substitution substitution, Letter right_seed,
                                         Letter left_seed) {
    if (substitution.alphabet_size() != alphabet.size()) throw DomainError("substitution/alphabet size mismatch");
    std::optional<std::size_t> power;
    for (std::size_t p = 1; p <= 12 && !power; ++p) {
        const auto right = substitution.iterate({right_seed}, p);
        const auto left = substitution.iterate({left_seed}, p);
        if (right.size() > 1 && left.size() > 1 && right.front() == right_seed && left.back() == left_seed) power = p;
    }
    if (!power) throw DomainError("seeds are not fixed by any power of the substitution up to 12");
    constexpr std::size_t kMaxLevels = 4096;
    constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
    std::vector<std::vector<std::uint64_t>> lengths{std::vector<std::uint64_t>(alphabet.size(), 1)};
    while (lengths.size() < kMaxLevels &&
           std::min(lengths.back()[right_seed], lengths.back()[left_seed]) < kSaturated) {
        std::vector<std::uint64_t> next(alphabet.size(), 0);
        for (std::size_t x = 0; x < alphabet.size(); ++x)
            for (Letter y : substitution.image(static_cast<Letter>(x)))
                next[x] = std::min(next[x] + lengths.back()[y], kSaturated);
        lengths.push_back(std::move(next));
    }
    return Configuration(std::make_shared<const ConfigurationNode>(ConfigurationNode{
        GroupSpec::lattice(1), std::move(alphabet),
        detail::FixedPointRule{std::move(substitution), right_seed, left_seed, *power, std::move(lengths)}}));
}

Configuration Configuration::explicit_random(GroupSpec group, Alphabet alphabet, std::uint64_t seed) {
    return Configuration(std::make_shared<const ConfigurationNode>(
        ConfigurationNode{std::move(group), std::move(alphabet), detail::ExplicitRule{seed}}));
}

Configuration Configuration::halfspace(GroupSpec group, Alphabet alphabet, std::size_t axis, Letter nonnegative,
                                       Letter negative) {
    if (!group.is_lattice() || axis >= group.rank()) throw DomainError("halfspace axis out of range");
    if (nonnegative >= alphabet.size() || negative >= alphabet.size()) throw DomainError("letter outside alphabet");
    return Configuration(std::make_shared<const ConfigurationNode>(ConfigurationNode{
        std::move(group), std::move(alphabet), detail::HalfspaceRule{axis, nonnegative, negative}}));
}

Configuration Configuration::patched(const Configuration& base,
                                     std::vector<std::pair<GroupElement, Letter>> overrides) {
    std::map<GroupElement, Letter> table;
    for (auto& [g, a] : overrides) {
        base.group().require(g);
        if (a >= base.alphabet().size()) throw DomainError("letter outside alphabet");
        table[g] = a;
    }
    return Configuration(std::make_shared<const ConfigurationNode>(
        ConfigurationNode{base.group(), base.alphabet(), detail::PatchedRule{base.node_, std::move(table)}}));
}

Configuration Configuration::extending(const Pattern& pattern, const Configuration& background) {
    std::vector<std::pair<GroupElement, Letter>> overrides;
    overrides.reserve(pattern.letters.size());
    for (std::size_t i = 0; i < pattern.letters.size(); ++i)
        overrides.emplace_back(pattern.window.elements()[i], pattern.letters[i]);
    return patched(background, std::move(overrides));
}

Letter Configuration::evaluate(const GroupElement& g) const {
    node_->group.require(g);
    return detail::evaluate_node(*node_, g);
}

Configuration Configuration::shifted(const GroupElement& g) const {
    node_->group.require(g);
    // shift(shift(w, a), g) = shift(w, g + a)
    if (const auto* s = std::get_if<detail::ShiftedRule>(&node_->rule)) {
        return Configuration(std::make_shared<const ConfigurationNode>(ConfigurationNode{
            node_->group, node_->alphabet, detail::ShiftedRule{s->base, compose(g, s->offset)}}));
    }
    return Configuration(std::make_shared<const ConfigurationNode>(
        ConfigurationNode{node_->group, node_->alphabet, detail::ShiftedRule{node_, g}}));
}

const GroupSpec& Configuration::group() const { return node_->group; }
const Alphabet& Configuration::alphabet() const { return node_->alphabet; }

std::optional<std::vector<std::int64_t>> Configuration::periods() const { return detail::node_periods(*node_); }

std::string Configuration::describe() const { return detail::describe_node(*node_); }

Pattern pattern_at(const Configuration& omega, const Window& window, const GroupElement& g) {
    std::vector<Letter> letters;
    letters.reserve(window.size());
    for (const auto& w : window.elements()) letters.push_back(omega.evaluate(compose(w, g)));
    return Pattern(window, std::move(letters));
}

MetricValue metric_distance(const Configuration& omega, const Configuration& nu, std::size_t truncation) {
    const auto& group = omega.group();
    if (!group.is_lattice()) throw DomainError("product metric is defined on lattice configurations only");
    if (!(group == nu.group())) throw DomainError("configurations live on different groups");
    double value = 0.0;
    for (std::size_t r = 0; r <= truncation; ++r) {
        const double weight = std::ldexp(1.0, -static_cast<int>(r));
        auto sphere = group.sphere(r);
        std::sort(sphere.begin(), sphere.end());
        for (const auto& k : sphere) {
            const double gap = std::abs(omega.alphabet().value(omega.evaluate(k)) - nu.alphabet().value(nu.evaluate(k)));
            value += weight * std::min(gap, 1.0);
        }
    }
    // Tail: sum_{r > M} |S_r| 2^{-r} min{l, 1}, with the l1 sphere count
    // |S_r| = sum_i 2^i C(N, i) C(r-1, i-1).
    const std::size_t n = group.rank();
    const auto sphere_count = [n](std::size_t r) {
        if (r == 0) return 1.0;
        double total = 0.0;
        for (std::size_t i = 1; i <= std::min(n, r); ++i) {
            double c = std::ldexp(1.0, static_cast<int>(i));
            for (std::size_t j = 0; j < i; ++j) c *= static_cast<double>(n - j) / static_cast<double>(j + 1);
            for (std::size_t j = 0; j < i - 1; ++j)
                c *= static_cast<double>(r - 1 - j) / static_cast<double>(j + 1);
            total += c;
        }
        return total;
    };
    const double cap = std::min(std::max(omega.alphabet().span(), nu.alphabet().span()), 1.0);
    double tail = 0.0;
    for (std::size_t r = truncation + 1; r <= truncation + 1100; ++r)
        tail += sphere_count(r) * std::ldexp(1.0, -static_cast<int>(r));
    return {value, tail * cap};
}

} // namespace hullspec
