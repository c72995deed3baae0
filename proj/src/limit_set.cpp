#include "hullspec/limit_set.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hullspec/error.hpp"

namespace hullspec {

std::vector<Pattern> LimitSetSample::patterns() const {
    std::set<Pattern> out;
    for (const auto& p : probes)
        if (p.stabilized) out.insert(*p.pattern);
    return {out.begin(), out.end()};
}

std::vector<Pattern> LimitSetSample::directional(const std::vector<double>& eta, double tolerance) const {
    std::set<Pattern> out;
    for (const auto& p : probes) {
        if (!p.stabilized || !p.direction || p.direction->size() != eta.size()) continue;
        double dist2 = 0.0;
        for (std::size_t i = 0; i < eta.size(); ++i) dist2 += ((*p.direction)[i] - eta[i]) * ((*p.direction)[i] - eta[i]);
        if (std::sqrt(dist2) <= tolerance) out.insert(*p.pattern);
    }
    return {out.begin(), out.end()};
}

LimitSetSample sample_limit_set(const Configuration& omega, const Window& window,
                                const std::vector<EscapeSequence>& sequences, std::size_t agree) {
    if (agree == 0) throw DomainError("stabilization needs at least one agreeing term");
    LimitSetSample sample{omega, window, {}};
    for (const auto& seq : sequences) {
        LimitSetProbe probe;
        probe.sequence = seq;
        if (seq.direction) {
            probe.direction = seq.direction;
        } else if (omega.group().is_lattice() && !seq.terms.empty() && !seq.terms.back().is_identity()) {
            probe.direction = unit_direction(seq.terms.back());
        }
        if (seq.terms.size() >= agree) {
            std::vector<Pattern> tail;
            for (std::size_t i = seq.terms.size() - agree; i < seq.terms.size(); ++i)
                tail.push_back(pattern_at(omega, window, seq.terms[i]));
            probe.stabilized = std::all_of(tail.begin(), tail.end(), [&](const Pattern& p) { return p == tail.front(); });
            if (probe.stabilized) probe.pattern = tail.front();
        }
        sample.probes.push_back(std::move(probe));
    }
    return sample;
}

EscapeSequence occurrence_sequence(const Configuration& omega, const Pattern& target, std::size_t count,
                                   std::size_t min_length, std::size_t search_radius) {
    const auto& group = omega.group();
    EscapeSequence seq;
    for (std::size_t r = min_length; r <= search_radius && seq.terms.size() < count; ++r) {
        auto sphere = group.sphere(r);
        std::sort(sphere.begin(), sphere.end());
        for (const auto& g : sphere) {
            if (pattern_at(omega, target.window, g) == target) seq.terms.push_back(g);
            if (seq.terms.size() == count) break;
        }
    }
    return seq;
}

EscapeSequence arithmetic_sequence(const GroupElement& start, const GroupElement& step, std::size_t count,
                                   std::optional<std::vector<double>> direction) {
    EscapeSequence seq;
    seq.direction = std::move(direction);
    GroupElement g = start;
    for (std::size_t n = 0; n < count; ++n) {
        g = compose(g, step);
        seq.terms.push_back(g);
    }
    return seq;
}

} // namespace hullspec
