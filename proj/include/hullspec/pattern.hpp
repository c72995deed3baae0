#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hullspec/alphabet.hpp"
#include "hullspec/window.hpp"

namespace hullspec {

/// Letters on a finite window, stored in the window's canonical order.
struct Pattern {
    Window window;
    std::vector<Letter> letters;

    Pattern(Window w, std::vector<Letter> l);

    Letter at(const GroupElement& g) const;
    /// The same letters carried to translate(window, g).
    Pattern translated(const GroupElement& g) const;
    /// Restriction to a sub-window.
    Pattern restricted(const Window& sub) const;

    std::string to_string(const Alphabet& alphabet) const;

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.letters == b.letters && a.window.elements() == b.window.elements();
    }
    friend bool operator<(const Pattern& a, const Pattern& b) {
        if (a.window.elements() != b.window.elements()) return a.window.elements() < b.window.elements();
        return a.letters < b.letters;
    }
};

} // namespace hullspec
