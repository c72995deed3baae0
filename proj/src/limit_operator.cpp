#include "hullspec/limit_operator.hpp"

#include <algorithm>

#include "hullspec/error.hpp"
#include "hullspec/linalg.hpp"

namespace hullspec {

LimitOperatorProbe approximate_limit_operator(const CoefficientScheme& scheme, const Configuration& omega,
                                              const EscapeSequence& sequence, std::size_t m, std::size_t agree) {
    LimitOperatorProbe probe;
    probe.sequence = sequence;
    probe.m = m;
    probe.observation_radius = scheme.locality_radius() + scheme.propagation() + m;
    const Window observation = Window::ball(scheme.group(), probe.observation_radius);
    const Window inner = Window::ball(scheme.group(), m);

    std::vector<Pattern> seen;
    seen.reserve(sequence.terms.size());
    std::optional<Configuration> previous;
    for (const auto& g : sequence.terms) {
        const Configuration moved = shift(omega, g);
        seen.push_back(restrict_to(moved, observation));
        probe.translated_norms.push_back(largest_singular_value(section(scheme, moved, inner, Boundary::truncate).matrix));
        if (previous) probe.convergence_trace.push_back(window_seminorm(scheme, *previous, moved, m));
        previous = moved;
    }
    if (agree > 0 && seen.size() >= agree) {
        const auto first = seen.end() - static_cast<std::ptrdiff_t>(agree);
        probe.stabilized = std::all_of(first, seen.end(), [&](const Pattern& p) { return p == *first; });
    }
    if (probe.stabilized) {
        probe.limit_pattern = seen.back();
        // Background letter is irrelevant: entries on ball(m) only read the pattern.
        const Configuration nu = Configuration::extending(
            *probe.limit_pattern, Configuration::constant(omega.group(), omega.alphabet(), 0));
        probe.limit_section = section(scheme, nu, inner, Boundary::truncate);
    }
    return probe;
}

std::vector<LimitOperatorProbe> operator_spectrum_sample(const CoefficientScheme& scheme, const Configuration& omega,
                                                         const std::vector<EscapeSequence>& sequences, std::size_t m) {
    std::vector<LimitOperatorProbe> out;
    for (const auto& seq : sequences) {
        auto probe = approximate_limit_operator(scheme, omega, seq, m);
        if (probe.stabilized) out.push_back(std::move(probe));
    }
    return out;
}

} // namespace hullspec
