#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hullspec {

enum class GroupKind : std::uint8_t { lattice, heisenberg };

inline constexpr std::size_t kMaxLatticeRank = 4;

/// Exact element of Z^N or of the discrete Heisenberg group H3(Z).
///
/// Heisenberg elements are stored as (a, b, c), standing for the unipotent
/// matrix [[1, a, c], [0, 1, b], [0, 0, 1]]. The group law is the matrix
/// product, which in these coordinates reads
///   (a, b, c) * (a', b', c') = (a + a', b + b', c + c' + a b').
/// Ordering is lexicographic on (kind, rank, coordinates); it fixes the
/// canonical row order of every finite section.
class GroupElement {
public:
    GroupElement() = default;

    static GroupElement lattice(std::initializer_list<std::int64_t> coords);
    static GroupElement lattice(const std::vector<std::int64_t>& coords);
    static GroupElement heisenberg(std::int64_t a, std::int64_t b, std::int64_t c);

    GroupKind kind() const noexcept { return kind_; }
    /// N for lattice elements, 3 for Heisenberg triples.
    std::size_t size() const noexcept { return size_; }
    std::int64_t operator[](std::size_t i) const noexcept { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) noexcept { return coords_[i]; }
    std::vector<std::int64_t> coordinates() const;

    bool is_identity() const noexcept;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;

    std::string to_string() const;

private:
    GroupKind kind_ = GroupKind::lattice;
    std::uint8_t size_ = 0;
    std::array<std::int64_t, kMaxLatticeRank> coords_{};
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Composition g + h in the additive notation used throughout; on H3(Z)
/// this is the matrix product g * h in that order.
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

class CayleyCache;

/// Z^N with the standard basis, or H3(Z) with its two unipotent generators.
class GroupSpec {
public:
    static GroupSpec lattice(std::size_t rank);
    static GroupSpec heisenberg();

    GroupKind kind() const noexcept { return kind_; }
    /// Lattice rank N; 3 for the Heisenberg group (coordinate count).
    std::size_t rank() const noexcept { return rank_; }
    bool is_lattice() const noexcept { return kind_ == GroupKind::lattice; }

    GroupElement identity() const;
    const std::vector<GroupElement>& generators() const noexcept { return generators_; }
    /// Generators followed by their inverses, in that order.
    std::vector<GroupElement> symmetric_generators() const;

    bool contains(const GroupElement& g) const noexcept;
    /// Throws DomainError unless g belongs to this group.
    void require(const GroupElement& g) const;

    /// Word length over generators and inverses. Closed form (l1 norm) on
    /// Z^N; breadth-first search over the Cayley graph on H3(Z), memoized up
    /// to max_word_radius(). Throws RadiusExceeded beyond that radius.
    std::size_t word_length(const GroupElement& g) const;
    std::size_t max_word_radius() const noexcept;

    /// Elements of word length exactly r, unsorted. Heisenberg uses the
    /// shared breadth-first cache.
    std::vector<GroupElement> sphere(std::size_t r) const;

    std::string name() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_;
    }

private:
    GroupSpec(GroupKind kind, std::size_t rank);

    GroupKind kind_;
    std::size_t rank_;
    std::vector<GroupElement> generators_;
    std::shared_ptr<CayleyCache> cache_;
};

/// Finite-scale stand-in for a sequence g_n -> infinity, optionally tagged
/// with the direction eta it is claimed to escape along (lattice only).
struct EscapeSequence {
    std::vector<GroupElement> terms;
    std::optional<std::vector<double>> direction;

    /// True when every term from index `cutoff` on has word length > radius.
    bool escapes_beyond(const GroupSpec& group, std::size_t radius, std::size_t cutoff) const;
};

/// Neighbourhood U of eta on the unit sphere: the cap of directions within
/// `half_angle` radians of eta.
struct AngularCap {
    std::vector<double> eta;
    double half_angle = 0.0;

    bool contains(const std::vector<double>& unit) const;
};

/// For each term k: |k| > radius and k/|k| in cap (Euclidean norm).
std::vector<bool> direction_memberships(const EscapeSequence& seq, double radius, const AngularCap& cap);

/// Euclidean unit vector k/|k| of a nonzero lattice element.
std::vector<double> unit_direction(const GroupElement& k);

} // namespace hullspec
