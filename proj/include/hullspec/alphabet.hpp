#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hullspec {

/// Index of a letter inside its alphabet.
using Letter = std::uint8_t;

/// Finite ordered alphabet with a real value per letter (used by potentials
/// and by the product metric).
class Alphabet {
public:
    Alphabet(std::vector<std::string> letters, std::vector<double> values);

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& name(Letter a) const { return letters_.at(a); }
    double value(Letter a) const { return values_.at(a); }
    const std::vector<std::string>& letters() const noexcept { return letters_; }
    const std::vector<double>& values() const noexcept { return values_; }
    /// Index of the named letter; throws DomainError when absent.
    Letter letter(const std::string& name) const;

    /// Width l of the value range, max value - min value.
    double span() const noexcept;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> letters_;
    std::vector<double> values_;
};

} // namespace hullspec
