#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullspec/configuration.hpp"
#include "hullspec/scheme.hpp"
#include "hullspec/subshift.hpp"

namespace hullspec {

/// Catalog scheme names: free_laplacian, fibonacci_jacobi, period_q_jacobi,
/// feinberg_zee, heisenberg_adjacency, plus the trivial `identity`.
/// All of them work on any of the supported groups; the offsets are the
/// symmetric generators (and the identity where a diagonal is present).
const std::vector<std::string>& scheme_names();
CoefficientScheme make_scheme(const std::string& name, const GroupSpec& group, const Alphabet& alphabet,
                              std::size_t block_dim = 1);

struct HullParams {
    std::size_t q = 2;          ///< period_q
    std::size_t rank = 1;       ///< lattice rank for period_q and full_pm1
    bool heisenberg = false;    ///< full_pm1 over H3(Z) instead of Z^N
    std::optional<std::vector<double>> letter_values;
};

/// A catalog hull with its canonical point.
struct Hull {
    std::string name;
    GroupSpec group;
    Alphabet alphabet;
    SubshiftSpec subshift;
    /// Fixed point, periodic pattern, half-plane or, for the full shift, the
    /// seed-0 explicit configuration.
    Configuration reference;
};

/// Catalog names: fibonacci, thue_morse, period_q, full_pm1, halfplane_ab.
const std::vector<std::string>& hull_names();
Hull make_hull(const std::string& name, const HullParams& params = {});

/// How to pick a point of a hull: rule in {reference, explicit, constant},
/// then shifted by `shift`.
struct ConfigurationSpec {
    std::string rule = "reference";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> letter;
    std::vector<std::int64_t> shift;
};

Configuration realize(const Hull& hull, const ConfigurationSpec& spec);

/// Lattice vector, or (a, b, c) on H3(Z).
GroupElement element_from(const GroupSpec& group, const std::vector<std::int64_t>& coords);

/// Fibonacci and Thue-Morse substitutions on {a, b}.
Substitution fibonacci_substitution();
Substitution thue_morse_substitution();

} // namespace hullspec
