#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hullspec/alphabet.hpp"
#include "hullspec/configuration.hpp"
#include "hullspec/pattern.hpp"
#include "hullspec/substitution.hpp"

namespace hullspec {

enum class SubshiftKind { full_shift, substitution_hull, periodic_hull, forbidden_patterns };

inline constexpr std::size_t kMaxPatternEnumeration = std::size_t{1} << 20;

namespace detail {
struct LanguageCache;
}

/// The compact space Omega, presented through its language: the set of
/// legal patterns on each finite window. Points are never materialized.
class SubshiftSpec {
public:
    static SubshiftSpec full_shift(GroupSpec group, Alphabet alphabet);
    /// Hull of a substitution on Z.
    static SubshiftSpec substitution_hull(Alphabet alphabet, Substitution substitution);
    /// Orbit closure of a periodic configuration.
    static SubshiftSpec periodic_hull(Configuration periodic);
    static SubshiftSpec forbidden_patterns(GroupSpec group, Alphabet alphabet, std::vector<Pattern> forbidden);

    SubshiftKind kind() const noexcept { return kind_; }
    const GroupSpec& group() const noexcept { return group_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Substitution* substitution() const noexcept { return substitution_ ? &*substitution_ : nullptr; }
    const Configuration* generator() const noexcept { return periodic_ ? &*periodic_ : nullptr; }
    std::string describe() const;

    /// All legal patterns on W, sorted. Throws ResourceError past
    /// kMaxPatternEnumeration candidates.
    std::vector<Pattern> legal_patterns(const Window& window) const;
    bool is_legal(const Pattern& pattern) const;

    /// Legal words of the given length (Z hulls), sorted. Each char holds a
    /// letter index, not a letter name.
    std::vector<std::string> factors(std::size_t length) const;

private:
    SubshiftSpec(SubshiftKind kind, GroupSpec group, Alphabet alphabet);

    SubshiftKind kind_;
    GroupSpec group_;
    Alphabet alphabet_;
    std::optional<Substitution> substitution_;
    std::optional<Configuration> periodic_;
    std::vector<Pattern> forbidden_;
    std::shared_ptr<detail::LanguageCache> cache_;
};

/// Factors of the given length of a substitution language, iterating the
/// substitution on its legal two-letter words until the factor set is the
/// same for two consecutive iterations.
std::vector<std::string> substitution_factors(const Substitution& substitution, std::size_t length);

} // namespace hullspec
