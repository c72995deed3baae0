#include "hullspec/certify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hullspec/error.hpp"

namespace hullspec {

Window certification_window(const GroupSpec& group, std::size_t n) {
    if (!group.is_lattice()) throw DomainError("finite-level certification is implemented on lattices");
    if (n == 0) throw DomainError("pattern size must be positive");
    return Window::box(group, std::vector<std::int64_t>(group.rank(), 0),
                       std::vector<std::int64_t>(group.rank(), static_cast<std::int64_t>(n) - 1));
}

namespace {

std::vector<GroupElement> inner_offsets(const GroupSpec& group, std::size_t n, std::size_t big_n) {
    return certification_window(group, big_n - n + 1).elements();
}

std::vector<Letter> letters_at(const Pattern& big, const Window& small, const GroupElement& t) {
    std::vector<Letter> out;
    out.reserve(small.size());
    for (const auto& w : small.elements()) out.push_back(big.at(compose(w, t)));
    return out;
}

} // namespace

MinimalityCertificate certify_minimal(const SubshiftSpec& omega, std::size_t n, std::size_t big_n) {
    if (big_n < n) throw DomainError("certify_minimal needs n <= N");
    const auto& group = omega.group();
    const Window small = certification_window(group, n);
    const Window big = certification_window(group, big_n);
    const auto small_patterns = omega.legal_patterns(small);
    const auto big_patterns = omega.legal_patterns(big);
    const auto offsets = inner_offsets(group, n, big_n);

    MinimalityCertificate cert;
    cert.n = n;
    cert.big_n = big_n;
    cert.legal_small = small_patterns.size();
    cert.legal_big = big_patterns.size();
    cert.certified = true;
    std::set<std::vector<Letter>> wanted;
    for (const auto& p : small_patterns) wanted.insert(p.letters);

    for (const auto& p : big_patterns) {
        std::set<std::vector<Letter>> found;
        for (const auto& t : offsets) found.insert(letters_at(p, small, t));
        if (found.size() == wanted.size() && std::includes(found.begin(), found.end(), wanted.begin(), wanted.end()))
            continue;
        cert.certified = false;
        cert.witness = p;
        for (const auto& w : wanted)
            if (!found.contains(w)) cert.missing.emplace_back(small, w);
        break;
    }
    if (cert.certified) cert.recurrence_radius = n + big_n;
    if (const auto* sub = omega.substitution()) cert.primitivity = sub->primitivity();
    return cert;
}

PseudoergodicCertificate certify_pseudoergodic(const Configuration& omega, const SubshiftSpec& hull, std::size_t n,
                                               std::size_t radius) {
    const auto& group = omega.group();
    if (!(group == hull.group())) throw DomainError("configuration and hull live on different groups");
    const Window shape = certification_window(group, n);
    const auto legal = hull.legal_patterns(shape);

    PseudoergodicCertificate cert;
    cert.n = n;
    cert.radius = radius;
    std::map<std::vector<Letter>, GroupElement> first_seen;
    std::set<std::vector<Letter>> wanted;
    for (const auto& p : legal) wanted.insert(p.letters);

    const auto periods = omega.periods();
    std::set<std::vector<std::int64_t>> residues;

    std::size_t found = 0;
    for (std::size_t r = n; r <= radius && found < wanted.size(); ++r) {
        auto sphere = group.sphere(r);
        std::sort(sphere.begin(), sphere.end());
        for (const auto& g : sphere) {
            bool inside = true;
            for (const auto& w : shape.elements())
                if (group.word_length(compose(w, g)) > radius) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            if (periods) {
                std::vector<std::int64_t> residue(periods->size());
                for (std::size_t i = 0; i < residue.size(); ++i)
                    residue[i] = ((g[i] % (*periods)[i]) + (*periods)[i]) % (*periods)[i];
                residues.insert(std::move(residue));
            }
            auto key = pattern_at(omega, shape, g).letters;
            if (wanted.contains(key) && first_seen.emplace(key, g).second) ++found;
            if (found == wanted.size()) break;
        }
    }

    for (const auto& p : legal) {
        if (auto it = first_seen.find(p.letters); it != first_seen.end())
            cert.occurrences.emplace_back(p, it->second);
        else
            cert.missing.push_back(p);
    }
    if (cert.missing.empty()) {
        cert.status = SearchStatus::certified;
    } else {
        std::size_t cells = 1;
        if (periods)
            for (auto p : *periods) cells *= static_cast<std::size_t>(p);
        cert.status = periods && residues.size() == cells ? SearchStatus::refuted : SearchStatus::inconclusive;
    }
    return cert;
}

} // namespace hullspec
