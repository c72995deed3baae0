#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hullspec/configuration.hpp"
#include "hullspec/group.hpp"
#include "hullspec/pattern.hpp"

namespace hullspec {

struct LimitSetProbe {
    EscapeSequence sequence;
    bool stabilized = false;
    /// Pattern of shift(omega, g_n) on the observation window once the last
    /// `agree` terms coincide.
    std::optional<Pattern> pattern;
    /// Claimed direction, or the direction of the last term when unclaimed
    /// (lattice only; the compactness step behind L = union of L^eta).
    std::optional<std::vector<double>> direction;
};

/// Finite sample of the limit set L(omega) (and, through tagged sequences,
/// of the directional sets L^eta(omega)).
struct LimitSetSample {
    Configuration source;
    Window window;
    std::vector<LimitSetProbe> probes;

    /// Distinct stabilized patterns, sorted.
    std::vector<Pattern> patterns() const;
    /// Distinct stabilized patterns of probes whose direction lies within
    /// `tolerance` (Euclidean) of eta.
    std::vector<Pattern> directional(const std::vector<double>& eta, double tolerance = 1e-9) const;
};

LimitSetSample sample_limit_set(const Configuration& omega, const Window& window,
                                const std::vector<EscapeSequence>& sequences, std::size_t agree = 3);

/// Escape sequence of `count` positions g, taken in order of increasing
/// word length starting at `min_length`, at which shift(omega, g) shows
/// `target` on its window. Realizes limit points of pseudoergodic
/// configurations. Stops at `search_radius`, possibly with fewer terms.
EscapeSequence occurrence_sequence(const Configuration& omega, const Pattern& target, std::size_t count,
                                   std::size_t min_length, std::size_t search_radius);

/// g_n = start + n * step for n = 1..count (lattice).
EscapeSequence arithmetic_sequence(const GroupElement& start, const GroupElement& step, std::size_t count,
                                   std::optional<std::vector<double>> direction = std::nullopt);

} // namespace hullspec
