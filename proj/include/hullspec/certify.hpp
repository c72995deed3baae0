#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hullspec/configuration.hpp"
#include "hullspec/subshift.hpp"

namespace hullspec {

/// Cube [0, n)^N used as the pattern shape for certification at level n.
Window certification_window(const GroupSpec& group, std::size_t n);

/// Finite-level uniform recurrence: every legal n-pattern occurs inside
/// every legal N-pattern.
struct MinimalityCertificate {
    bool certified = false;
    std::size_t n = 0;
    std::size_t big_n = 0;
    std::size_t legal_small = 0;
    std::size_t legal_big = 0;
    /// Refutation: an N-pattern missing some n-pattern, and what it misses.
    std::optional<Pattern> witness;
    std::vector<Pattern> missing;
    /// Search radius that suffices for pseudoergodicity at level n once
    /// certified: n + N.
    std::size_t recurrence_radius = 0;
    /// Substitution hulls only: an entrywise positive incidence power.
    std::optional<PrimitivityWitness> primitivity;
};

MinimalityCertificate certify_minimal(const SubshiftSpec& omega, std::size_t n, std::size_t big_n);

enum class SearchStatus { certified, refuted, inconclusive };

/// Every legal n-pattern occurs in omega inside ball(R) at a position of
/// word length >= n. Missing patterns are a refutation only when omega is
/// periodic and the scanned positions covered a full period; otherwise the
/// result is inconclusive.
struct PseudoergodicCertificate {
    SearchStatus status = SearchStatus::inconclusive;
    std::size_t n = 0;
    std::size_t radius = 0;
    std::vector<std::pair<Pattern, GroupElement>> occurrences;
    std::vector<Pattern> missing;
};

PseudoergodicCertificate certify_pseudoergodic(const Configuration& omega, const SubshiftSpec& hull, std::size_t n,
                                               std::size_t radius);

} // namespace hullspec
