#include "hullspec/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hullspec/error.hpp"

namespace hullspec {

GroupElement GroupElement::lattice(std::initializer_list<std::int64_t> coords) {
    return lattice(std::vector<std::int64_t>(coords));
}

GroupElement GroupElement::lattice(const std::vector<std::int64_t>& coords) {
    if (coords.empty() || coords.size() > kMaxLatticeRank)
        throw DomainError("lattice rank must be in 1.." + std::to_string(kMaxLatticeRank));
    GroupElement g;
    g.kind_ = GroupKind::lattice;
    g.size_ = static_cast<std::uint8_t>(coords.size());
    std::copy(coords.begin(), coords.end(), g.coords_.begin());
    return g;
}

GroupElement GroupElement::heisenberg(std::int64_t a, std::int64_t b, std::int64_t c) {
    GroupElement g;
    g.kind_ = GroupKind::heisenberg;
    g.size_ = 3;
    g.coords_ = {a, b, c, 0};
    return g;
}

std::vector<std::int64_t> GroupElement::coordinates() const {
    return {coords_.begin(), coords_.begin() + size_};
}

bool GroupElement::is_identity() const noexcept {
    for (std::size_t i = 0; i < size_; ++i)
        if (coords_[i] != 0) return false;
    return true;
}

std::string GroupElement::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < size_; ++i) {
        if (i) out << ',';
        out << coords_[i];
    }
    out << ')';
    return out.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.kind());
    for (std::size_t i = 0; i < g.size(); ++i) {
        h ^= static_cast<std::uint64_t>(g[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

namespace {

void require_same(const GroupElement& g, const GroupElement& h) {
    if (g.kind() != h.kind() || g.size() != h.size())
        throw DomainError("cannot compose " + g.to_string() + " and " + h.to_string() +
                          ": elements of different groups");
}

} // namespace

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    require_same(g, h);
    GroupElement out = g;
    if (g.kind() == GroupKind::lattice) {
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] + h[i];
    } else {
        out[0] = g[0] + h[0];
        out[1] = g[1] + h[1];
        out[2] = g[2] + h[2] + g[0] * h[1];
    }
    return out;
}

GroupElement inverse(const GroupElement& g) {
    GroupElement out = g;
    if (g.kind() == GroupKind::lattice) {
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = -g[i];
    } else {
        out[0] = -g[0];
        out[1] = -g[1];
        out[2] = g[0] * g[1] - g[2];
    }
    return out;
}

// Breadth-first layers of the Heisenberg Cayley graph, grown on demand.
class CayleyCache {
public:
    CayleyCache(std::vector<GroupElement> steps, GroupElement identity, std::size_t max_radius)
        : steps_(std::move(steps)), max_radius_(max_radius) {
        distance_.emplace(identity, 0);
        layers_.push_back({identity});
    }

    std::size_t max_radius() const noexcept { return max_radius_; }

    std::size_t distance(const GroupElement& g) {
        std::lock_guard lock(mutex_);
        for (;;) {
            if (auto it = distance_.find(g); it != distance_.end()) return it->second;
            if (layers_.size() > max_radius_)
                throw RadiusExceeded(max_radius_, "word length of " + g.to_string() + " not found");
            grow();
        }
    }

    std::vector<GroupElement> layer(std::size_t r) {
        std::lock_guard lock(mutex_);
        if (r > max_radius_) throw ResourceError("ball radius " + std::to_string(r) + " over bound " +
                                                 std::to_string(max_radius_));
        while (layers_.size() <= r) grow();
        return layers_[r];
    }

private:
    void grow() {
        const std::size_t next = layers_.size();
        std::vector<GroupElement> frontier;
        for (const auto& g : layers_.back()) {
            for (const auto& s : steps_) {
                auto h = compose(g, s);
                if (distance_.emplace(h, next).second) frontier.push_back(h);
            }
        }
        layers_.push_back(std::move(frontier));
    }

    std::vector<GroupElement> steps_;
    std::size_t max_radius_;
    std::mutex mutex_;
    std::unordered_map<GroupElement, std::size_t, GroupElementHash> distance_;
    std::vector<std::vector<GroupElement>> layers_;
};

namespace {

constexpr std::size_t kHeisenbergMaxRadius = 24;

} // namespace

GroupSpec::GroupSpec(GroupKind kind, std::size_t rank) : kind_(kind), rank_(rank) {}

GroupSpec GroupSpec::lattice(std::size_t rank) {
    if (rank == 0 || rank > kMaxLatticeRank)
        throw DomainError("lattice rank must be in 1.." + std::to_string(kMaxLatticeRank));
    GroupSpec spec(GroupKind::lattice, rank);
    for (std::size_t j = 0; j < rank; ++j) {
        std::vector<std::int64_t> e(rank, 0);
        e[j] = 1;
        spec.generators_.push_back(GroupElement::lattice(e));
    }
    return spec;
}

GroupSpec GroupSpec::heisenberg() {
    GroupSpec spec(GroupKind::heisenberg, 3);
    spec.generators_ = {GroupElement::heisenberg(1, 0, 0), GroupElement::heisenberg(0, 1, 0)};
    spec.cache_ = std::make_shared<CayleyCache>(spec.symmetric_generators(), spec.identity(),
                                                kHeisenbergMaxRadius);
    return spec;
}

GroupElement GroupSpec::identity() const {
    if (kind_ == GroupKind::heisenberg) return GroupElement::heisenberg(0, 0, 0);
    return GroupElement::lattice(std::vector<std::int64_t>(rank_, 0));
}

std::vector<GroupElement> GroupSpec::symmetric_generators() const {
    std::vector<GroupElement> out = generators_;
    for (const auto& g : generators_) out.push_back(inverse(g));
    return out;
}

bool GroupSpec::contains(const GroupElement& g) const noexcept {
    return g.kind() == kind_ && g.size() == rank_;
}

void GroupSpec::require(const GroupElement& g) const {
    if (!contains(g)) throw DomainError(g.to_string() + " is not an element of " + name());
}

std::size_t GroupSpec::word_length(const GroupElement& g) const {
    require(g);
    if (kind_ == GroupKind::lattice) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < rank_; ++i) total += static_cast<std::size_t>(std::llabs(g[i]));
        return total;
    }
    return cache_->distance(g);
}

std::size_t GroupSpec::max_word_radius() const noexcept {
    return cache_ ? cache_->max_radius() : std::numeric_limits<std::size_t>::max();
}

std::vector<GroupElement> GroupSpec::sphere(std::size_t r) const {
    if (kind_ == GroupKind::heisenberg) return cache_->layer(r);
    // l1 sphere in Z^N by recursion on the first coordinate.
    std::vector<GroupElement> out;
    std::vector<std::int64_t> coords(rank_, 0);
    const auto fill = [&](auto&& self, std::size_t axis, std::int64_t remaining) -> void {
        if (axis + 1 == rank_) {
            coords[axis] = remaining;
            out.push_back(GroupElement::lattice(coords));
            if (remaining != 0) {
                coords[axis] = -remaining;
                out.push_back(GroupElement::lattice(coords));
            }
            return;
        }
        for (std::int64_t c = -remaining; c <= remaining; ++c) {
            coords[axis] = c;
            self(self, axis + 1, remaining - std::llabs(c));
        }
    };
    fill(fill, 0, static_cast<std::int64_t>(r));
    return out;
}

std::string GroupSpec::name() const {
    if (kind_ == GroupKind::heisenberg) return "heisenberg";
    return "lattice(" + std::to_string(rank_) + ")";
}

bool EscapeSequence::escapes_beyond(const GroupSpec& group, std::size_t radius, std::size_t cutoff) const {
    for (std::size_t i = cutoff; i < terms.size(); ++i) {
        const auto& g = terms[i];
        group.require(g);
        if (group.is_lattice()) {
            if (group.word_length(g) <= radius) return false;
        } else {
            // Ball membership settles |g| <= radius without needing |g| itself.
            bool inside = false;
            for (std::size_t r = 0; r <= radius && !inside; ++r) {
                const auto layer = group.sphere(r);
                inside = std::find(layer.begin(), layer.end(), g) != layer.end();
            }
            if (inside) return false;
        }
    }
    return true;
}

bool AngularCap::contains(const std::vector<double>& unit) const {
    if (unit.size() != eta.size()) throw DomainError("direction dimension mismatch");
    double dot = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        dot += unit[i] * eta[i];
        norm += eta[i] * eta[i];
    }
    dot /= std::sqrt(norm);
    return std::acos(std::clamp(dot, -1.0, 1.0)) <= half_angle;
}

std::vector<double> unit_direction(const GroupElement& k) {
    if (k.kind() != GroupKind::lattice) throw DomainError("directions undefined for this group");
    double norm = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) norm += static_cast<double>(k[i]) * static_cast<double>(k[i]);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw DomainError("identity has no direction");
    std::vector<double> out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = static_cast<double>(k[i]) / norm;
    return out;
}

std::vector<bool> direction_memberships(const EscapeSequence& seq, double radius, const AngularCap& cap) {
    std::vector<bool> out;
    out.reserve(seq.terms.size());
    for (const auto& k : seq.terms) {
        if (k.kind() != GroupKind::lattice) throw DomainError("directions undefined for this group");
        double norm2 = 0.0;
        for (std::size_t i = 0; i < k.size(); ++i) norm2 += static_cast<double>(k[i]) * static_cast<double>(k[i]);
        const double norm = std::sqrt(norm2);
        out.push_back(norm > radius && cap.contains(unit_direction(k)));
    }
    return out;
}

} // namespace hullspec
