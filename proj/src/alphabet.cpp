#include "hullspec/alphabet.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hullspec/error.hpp"

namespace hullspec {

Alphabet::Alphabet(std::vector<std::string> letters, std::vector<double> values)
    : letters_(std::move(letters)), values_(std::move(values)) {
    if (letters_.empty()) throw DomainError("alphabet must not be empty");
    if (letters_.size() > 255) throw DomainError("alphabet too large");
    if (letters_.size() != values_.size()) throw DomainError("one value per letter required");
    if (std::set<std::string>(letters_.begin(), letters_.end()).size() != letters_.size())
        throw DomainError("alphabet letters must be distinct");
    for (double v : values_)
        if (!std::isfinite(v)) throw DomainError("letter values must be finite");
}

Letter Alphabet::letter(const std::string& name) const {
    auto it = std::find(letters_.begin(), letters_.end(), name);
    if (it == letters_.end()) throw DomainError("letter '" + name + "' not in alphabet");
    return static_cast<Letter>(it - letters_.begin());
}

double Alphabet::span() const noexcept {
    auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    return *hi - *lo;
}

} // namespace hullspec
