#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullspec/alphabet.hpp"
#include "hullspec/group.hpp"
#include "hullspec/pattern.hpp"
#include "hullspec/substitution.hpp"

namespace hullspec {

namespace detail {
struct ConfigurationNode;
}

/// A point of the hull: a rule-backed, total map from group elements to
/// letters. Immutable; copies share the rule.
class Configuration {
public:
    /// Periodic on Z^N: `fundamental` holds the letters on the box
    /// [0, p_1) x ... x [0, p_N) in row-major order (last axis fastest).
    static Configuration periodic(GroupSpec group, Alphabet alphabet, std::vector<std::int64_t> periods,
                                  std::vector<Letter> fundamental);
    /// Constant letter; on Z^N this is periodic with all periods 1.
    static Configuration constant(GroupSpec group, Alphabet alphabet, Letter letter);
    /// Two-sided fixed point of a substitution on Z: position 0 onwards is the
    /// limit of image^n(right_seed), positions < 0 the left-infinite limit of
    /// image^n(left_seed). Both seeds must be fixed by some common power.
    static Configuration fixed_point(Alphabet alphabet, Substitution substitution, Letter right_seed,
                                     Letter left_seed);
    /// Counter-based pseudorandom letters, uniform over the alphabet.
    static Configuration explicit_random(GroupSpec group, Alphabet alphabet, std::uint64_t seed);
    /// Letter `nonnegative` where coordinate `axis` is >= 0, `negative` elsewhere.
    static Configuration halfspace(GroupSpec group, Alphabet alphabet, std::size_t axis, Letter nonnegative,
                                   Letter negative);
    static Configuration patched(const Configuration& base, std::vector<std::pair<GroupElement, Letter>> overrides);
    /// Any configuration that agrees with `pattern` on its window.
    static Configuration extending(const Pattern& pattern, const Configuration& background);

    Letter evaluate(const GroupElement& g) const;
    Configuration shifted(const GroupElement& g) const;

    const GroupSpec& group() const;
    const Alphabet& alphabet() const;
    /// Lattice periods (one per axis) when the rule is periodic.
    std::optional<std::vector<std::int64_t>> periods() const;
    std::string describe() const;

private:
    explicit Configuration(std::shared_ptr<const detail::ConfigurationNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::ConfigurationNode> node_;
};

inline Letter evaluate(const Configuration& omega, const GroupElement& g) { return omega.evaluate(g); }
/// evaluate(shift(omega, g), h) == evaluate(omega, h + g).
inline Configuration shift(const Configuration& omega, const GroupElement& g) { return omega.shifted(g); }

/// Pattern of shift(omega, g) on W, i.e. w -> omega(w + g).
Pattern pattern_at(const Configuration& omega, const Window& window, const GroupElement& g);
inline Pattern restrict_to(const Configuration& omega, const Window& window) {
    return pattern_at(omega, window, window.group().identity());
}

/// Product-metric distance sum_k 2^{-|k|} min{|omega_k - nu_k|, 1}, summed
/// over ball(M), with a certified bound on the omitted tail.
struct MetricValue {
    double value;
    double tail_bound;
};
MetricValue metric_distance(const Configuration& omega, const Configuration& nu, std::size_t truncation);

/// The pinned counter-based generator behind explicit_random (see
/// docs/rng.md): a SplitMix64 finalizer folded over the coordinates.
std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t position_hash(std::uint64_t seed, const GroupElement& g) noexcept;

} // namespace hullspec
