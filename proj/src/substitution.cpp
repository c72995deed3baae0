#include "hullspec/substitution.hpp"

#include <algorithm>

#include "hullspec/error.hpp"

namespace hullspec {

namespace {
constexpr std::uint64_t kSaturate = std::uint64_t{1} << 62;
}

Substitution::Substitution(std::size_t alphabet_size, std::vector<Word> images) : images_(std::move(images)) {
    if (images_.size() != alphabet_size) throw DomainError("one image per letter required");
    for (const auto& w : images_) {
        if (w.empty()) throw DomainError("substitution images must be non-empty");
        for (Letter a : w)
            if (a >= alphabet_size) throw DomainError("substitution image uses an unknown letter");
    }
}

Word Substitution::apply(const Word& w) const {
    Word out;
    for (Letter a : w) {
        const auto& img = images_[a];
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word Substitution::iterate(const Word& w, std::size_t times) const {
    Word out = w;
    for (std::size_t i = 0; i < times; ++i) out = apply(out);
    return out;
}

IncidenceMatrix Substitution::incidence_matrix() const {
    const std::size_t k = images_.size();
    IncidenceMatrix m(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (Letter a : images_[j]) ++m[a][j];
    return m;
}

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    const std::size_t k = a.size();
    IncidenceMatrix out(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < k; ++j) out[i][j] = std::min(out[i][j] + a[i][l] * b[l][j], kSaturate);
    return out;
}

std::optional<PrimitivityWitness> Substitution::primitivity() const {
    const auto m = incidence_matrix();
    auto power = m;
    const std::size_t k = m.size();
    for (std::size_t p = 1; p <= k * k; ++p) {
        const bool positive = std::all_of(power.begin(), power.end(), [](const auto& row) {
            return std::all_of(row.begin(), row.end(), [](std::uint64_t v) { return v > 0; });
        });
        if (positive) return PrimitivityWitness{p, power};
        power = multiply(power, m);
    }
    return std::nullopt;
}

std::uint64_t Substitution::length(Letter a, std::size_t n) const {
    std::vector<std::uint64_t> len(images_.size(), 1);
    for (std::size_t level = 0; level < n; ++level) {
        std::vector<std::uint64_t> next(images_.size(), 0);
        for (std::size_t x = 0; x < images_.size(); ++x)
            for (Letter y : images_[x]) next[x] = std::min(next[x] + len[y], kSaturate);
        len = std::move(next);
    }
    return len[a];
}

} // namespace hullspec
