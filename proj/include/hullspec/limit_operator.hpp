#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hullspec/configuration.hpp"
#include "hullspec/group.hpp"
#include "hullspec/scheme.hpp"
#include "hullspec/section.hpp"

namespace hullspec {

/// Finite-scale limit operator A_g: the pattern of shift(omega, g_n) on
/// ball(r + propagation + m) is tracked along the sequence; once the last
/// `agree` probes coincide, the section of A(nu) on ball(m) for any nu
/// extending that pattern is the limit section.
struct LimitOperatorProbe {
    EscapeSequence sequence;
    std::size_t m = 0;
    std::size_t observation_radius = 0;
    bool stabilized = false;
    std::optional<Pattern> limit_pattern;
    std::optional<FiniteSection> limit_section;
    /// window_seminorm at level m between consecutive translates.
    std::vector<double> convergence_trace;
    /// Largest singular value of the section of shift(omega, g_n) on ball(m).
    std::vector<double> translated_norms;
};

LimitOperatorProbe approximate_limit_operator(const CoefficientScheme& scheme, const Configuration& omega,
                                              const EscapeSequence& sequence, std::size_t m, std::size_t agree = 3);

/// Stabilized probes only, in input order.
std::vector<LimitOperatorProbe> operator_spectrum_sample(const CoefficientScheme& scheme, const Configuration& omega,
                                                         const std::vector<EscapeSequence>& sequences, std::size_t m);

} // namespace hullspec
