#include "hullspec/subshift.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "hullspec/error.hpp"

namespace hullspec {

namespace detail {
struct LanguageCache {
    std::mutex mutex;
    std::map<std::size_t, std::vector<std::string>> factors;
};
} // namespace detail

namespace {

constexpr std::size_t kMaxWordLength = std::size_t{1} << 23;

std::string expand(const Substitution& sub, const std::string& w) {
    std::string out;
    for (char c : w) {
        const auto& img = sub.image(static_cast<Letter>(c));
        out.append(img.begin(), img.end());
    }
    return out;
}

std::set<std::string> factors_of(const std::vector<std::string>& words, std::size_t length) {
    std::unordered_set<std::string> seen;
    for (const auto& w : words)
        for (std::size_t i = 0; i + length <= w.size(); ++i) seen.insert(w.substr(i, length));
    return {seen.begin(), seen.end()};
}

// Factor sets over successive images of `seeds`, until three consecutive
// sets agree once every image is at least `length` long.
std::set<std::string> stable_factors(const Substitution& sub, std::vector<std::string> words, std::size_t length) {
    std::vector<std::set<std::string>> history;
    for (;;) {
        const bool long_enough =
            std::all_of(words.begin(), words.end(), [&](const auto& w) { return w.size() >= length; });
        if (long_enough) {
            history.push_back(factors_of(words, length));
            const std::size_t h = history.size();
            if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3]) return history.back();
        }
        for (auto& w : words) {
            w = expand(sub, w);
            if (w.size() > kMaxWordLength)
                throw ResourceError("substitution language did not stabilize at length " + std::to_string(length));
        }
    }
}

} // namespace

std::vector<std::string> substitution_factors(const Substitution& substitution, std::size_t length) {
    if (length == 0) return {std::string()};
    std::vector<std::string> letters;
    for (std::size_t a = 0; a < substitution.alphabet_size(); ++a) letters.emplace_back(1, static_cast<char>(a));
    const auto pairs = stable_factors(substitution, letters, 2);
    std::vector<std::string> seeds(pairs.begin(), pairs.end());
    if (length == 1) {
        std::set<std::string> singles;
        for (const auto& p : seeds) {
            singles.insert(p.substr(0, 1));
            singles.insert(p.substr(1, 1));
        }
        return {singles.begin(), singles.end()};
    }
    const auto out = stable_factors(substitution, seeds, length);
    return {out.begin(), out.end()};
}

SubshiftSpec::SubshiftSpec(SubshiftKind kind, GroupSpec group, Alphabet alphabet)
    : kind_(kind), group_(std::move(group)), alphabet_(std::move(alphabet)),
      cache_(std::make_shared<detail::LanguageCache>()) {}

SubshiftSpec SubshiftSpec::full_shift(GroupSpec group, Alphabet alphabet) {
    return SubshiftSpec(SubshiftKind::full_shift, std::move(group), std::move(alphabet));
}

SubshiftSpec SubshiftSpec::substitution_hull(Alphabet alphabet, Substitution substitution) {
    if (substitution.alphabet_size() != alphabet.size()) throw DomainError("substitution/alphabet size mismatch");
    SubshiftSpec spec(SubshiftKind::substitution_hull, GroupSpec::lattice(1), std::move(alphabet));
    spec.substitution_ = std::move(substitution);
    return spec;
}

SubshiftSpec SubshiftSpec::periodic_hull(Configuration periodic) {
    if (!periodic.periods()) throw DomainError("periodic hull needs a periodic configuration");
    SubshiftSpec spec(SubshiftKind::periodic_hull, periodic.group(), periodic.alphabet());
    spec.periodic_ = std::move(periodic);
    return spec;
}

SubshiftSpec SubshiftSpec::forbidden_patterns(GroupSpec group, Alphabet alphabet, std::vector<Pattern> forbidden) {
    for (const auto& p : forbidden)
        if (!(p.window.group() == group)) throw DomainError("forbidden pattern lives on another group");
    SubshiftSpec spec(SubshiftKind::forbidden_patterns, std::move(group), std::move(alphabet));
    spec.forbidden_ = std::move(forbidden);
    return spec;
}

std::string SubshiftSpec::describe() const {
    switch (kind_) {
    case SubshiftKind::full_shift: return "full_shift(" + group_.name() + ")";
    case SubshiftKind::substitution_hull: return "substitution_hull";
    case SubshiftKind::periodic_hull: return "periodic_hull(" + periodic_->describe() + ")";
    case SubshiftKind::forbidden_patterns:
        return "forbidden_patterns(" + std::to_string(forbidden_.size()) + ")";
    }
    return "subshift";
}

std::vector<std::string> SubshiftSpec::factors(std::size_t length) const {
    if (kind_ == SubshiftKind::substitution_hull) {
        {
            std::lock_guard lock(cache_->mutex);
            if (auto it = cache_->factors.find(length); it != cache_->factors.end()) return it->second;
        }
        auto words = substitution_factors(*substitution_, length);
        std::lock_guard lock(cache_->mutex);
        return cache_->factors.emplace(length, std::move(words)).first->second;
    }
    if (!(group_.kind() == GroupKind::lattice && group_.rank() == 1)) throw DomainError("factors are words over Z");
    std::vector<std::string> out;
    for (const auto& p : legal_patterns(Window::interval(group_, 0, length))) out.emplace_back(p.letters.begin(), p.letters.end());
    return out;
}

namespace {

// Calls visit(letters) for every assignment of letters to `size` sites in
// lexicographic order.
template <typename Visit>
void enumerate_assignments(std::size_t size, std::size_t alphabet, Visit&& visit) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < size; ++i) {
        total *= alphabet;
        if (total > kMaxPatternEnumeration)
            throw ResourceError("pattern enumeration budget exceeded (" + std::to_string(alphabet) + "^" +
                                std::to_string(size) + " candidates)");
    }
    std::vector<Letter> letters(size, 0);
    for (;;) {
        visit(letters);
        std::size_t i = size;
        while (i > 0) {
            --i;
            if (++letters[i] < alphabet) break;
            letters[i] = 0;
            if (i == 0) return;
        }
        if (size == 0) return;
    }
}

bool occurs_at(const Pattern& forbidden, const Pattern& candidate, const GroupElement& t) {
    for (std::size_t i = 0; i < forbidden.letters.size(); ++i) {
        auto index = candidate.window.index_of(compose(forbidden.window.elements()[i], t));
        if (!index || candidate.letters[*index] != forbidden.letters[i]) return false;
    }
    return true;
}

bool avoids(const Pattern& candidate, const std::vector<Pattern>& forbidden) {
    for (const auto& f : forbidden) {
        if (f.window.size() == 0) continue;
        const auto anchor_inverse = inverse(f.window.elements().front());
        for (const auto& w : candidate.window.elements())
            if (occurs_at(f, candidate, compose(anchor_inverse, w))) return false;
    }
    return true;
}

bool contiguous_interval(const Window& window) {
    const auto& e = window.elements();
    return e.back()[0] - e.front()[0] + 1 == static_cast<std::int64_t>(e.size());
}

} // namespace

std::vector<Pattern> SubshiftSpec::legal_patterns(const Window& window) const {
    if (!(window.group() == group_)) throw DomainError("window lives on another group");
    if (window.size() == 0) return {};
    std::vector<Pattern> out;
    switch (kind_) {
    case SubshiftKind::full_shift:
        enumerate_assignments(window.size(), alphabet_.size(),
                              [&](const std::vector<Letter>& l) { out.emplace_back(window, l); });
        break;
    case SubshiftKind::forbidden_patterns:
        enumerate_assignments(window.size(), alphabet_.size(), [&](const std::vector<Letter>& l) {
            Pattern candidate(window, l);
            if (avoids(candidate, forbidden_)) out.push_back(std::move(candidate));
        });
        break;
    case SubshiftKind::periodic_hull: {
        const auto periods = *periodic_->periods();
        std::set<Pattern> seen;
        std::vector<std::int64_t> t(periods.size(), 0);
        for (;;) {
            seen.insert(pattern_at(*periodic_, window, GroupElement::lattice(t)));
            std::size_t i = t.size();
            bool done = true;
            while (i > 0) {
                --i;
                if (++t[i] < periods[i]) {
                    done = false;
                    break;
                }
                t[i] = 0;
            }
            if (done) break;
        }
        out.assign(seen.begin(), seen.end());
        break;
    }
    case SubshiftKind::substitution_hull: {
        const std::int64_t lo = window.elements().front()[0];
        const std::int64_t hi = window.elements().back()[0];
        std::set<Pattern> seen;
        for (const auto& f : factors(static_cast<std::size_t>(hi - lo + 1))) {
            std::vector<Letter> letters;
            letters.reserve(window.size());
            for (const auto& g : window.elements()) letters.push_back(static_cast<Letter>(f[static_cast<std::size_t>(g[0] - lo)]));
            seen.emplace(window, std::move(letters));
        }
        out.assign(seen.begin(), seen.end());
        break;
    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SubshiftSpec::is_legal(const Pattern& pattern) const {
    if (!(pattern.window.group() == group_)) return false;
    for (Letter a : pattern.letters)
        if (a >= alphabet_.size()) return false;
    switch (kind_) {
    case SubshiftKind::full_shift: return true;
    case SubshiftKind::forbidden_patterns: return avoids(pattern, forbidden_);
    case SubshiftKind::substitution_hull:
        if (contiguous_interval(pattern.window)) {
            const auto words = factors(pattern.window.size());
            return std::binary_search(words.begin(), words.end(),
                                      std::string(pattern.letters.begin(), pattern.letters.end()));
        }
        [[fallthrough]];
    case SubshiftKind::periodic_hull: {
        const auto legal = legal_patterns(pattern.window);
        return std::binary_search(legal.begin(), legal.end(), pattern);
    }
    }
    return false;
}

} // namespace hullspec
