#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullspec/alphabet.hpp"

namespace hullspec {

using Word = std::vector<Letter>;
using IncidenceMatrix = std::vector<std::vector<std::uint64_t>>;

struct PrimitivityWitness {
    std::size_t power;
    IncidenceMatrix matrix; ///< the entrywise positive power
};

/// Letter-to-word substitution on a finite alphabet (Z only).
class Substitution {
public:
    Substitution(std::size_t alphabet_size, std::vector<Word> images);

    std::size_t alphabet_size() const noexcept { return images_.size(); }
    const Word& image(Letter a) const { return images_.at(a); }
    Word apply(const Word& w) const;
    Word iterate(const Word& w, std::size_t times) const;

    /// M[i][j] = number of occurrences of letter i in the image of letter j.
    IncidenceMatrix incidence_matrix() const;
    /// Smallest power <= |A|^2 of the incidence matrix that is entrywise
    /// positive, if any.
    std::optional<PrimitivityWitness> primitivity() const;

    /// |image^n(a)|, saturating at 2^62.
    std::uint64_t length(Letter a, std::size_t n) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::vector<Word> images_;
};

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b);

} // namespace hullspec
