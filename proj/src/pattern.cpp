#include "hullspec/pattern.hpp"

#include "hullspec/error.hpp"

namespace hullspec {

Pattern::Pattern(Window w, std::vector<Letter> l) : window(std::move(w)), letters(std::move(l)) {
    if (letters.size() != window.size()) throw DomainError("pattern letters must cover the window exactly");
}

Letter Pattern::at(const GroupElement& g) const {
    auto index = window.index_of(g);
    if (!index) throw DomainError(g.to_string() + " is outside the pattern window");
    return letters[*index];
}

Pattern Pattern::translated(const GroupElement& g) const {
    // Right translation preserves the lexicographic order only on abelian
    // groups, so letters are re-placed by element.
    Window moved = Window::translate(window, g);
    std::vector<Letter> out(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) out[*moved.index_of(compose(window.elements()[i], g))] = letters[i];
    return Pattern(std::move(moved), std::move(out));
}

Pattern Pattern::restricted(const Window& sub) const {
    std::vector<Letter> out;
    out.reserve(sub.size());
    for (const auto& g : sub.elements()) out.push_back(at(g));
    return Pattern(sub, std::move(out));
}

std::string Pattern::to_string(const Alphabet& alphabet) const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const auto& name = alphabet.name(letters[i]);
        if (name.size() > 1 && i) out += ' ';
        out += name;
    }
    return out;
}

} // namespace hullspec
