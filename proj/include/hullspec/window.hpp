#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hullspec/group.hpp"

namespace hullspec {

class Window;

namespace window_kind {
struct Ball {
    std::size_t radius;
};
/// Axis-aligned box of Z^N, inclusive bounds per axis.
struct Box {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
};
/// { w + g : w in base }.
struct Translate {
    std::shared_ptr<const Window> base;
    GroupElement offset;
};
struct Explicit {};
} // namespace window_kind

using WindowDescriptor =
    std::variant<window_kind::Ball, window_kind::Box, window_kind::Translate, window_kind::Explicit>;

/// Finite index set in canonical (lexicographic) element order. The order
/// fixes the row/column layout of finite sections.
class Window {
public:
    /// Word-metric ball; sizes are checked against kMaxWindowSize.
    static Window ball(const GroupSpec& group, std::size_t radius);
    static Window box(const GroupSpec& group, std::vector<std::int64_t> lower, std::vector<std::int64_t> upper);
    static Window centered_box(const GroupSpec& group, const std::vector<std::int64_t>& halfwidths);
    /// {0, ..., length-1} on Z.
    static Window interval(const GroupSpec& group, std::int64_t first, std::size_t length);
    static Window translate(const Window& base, const GroupElement& g);
    static Window from_elements(const GroupSpec& group, std::vector<GroupElement> elements);

    const GroupSpec& group() const noexcept { return group_; }
    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    const WindowDescriptor& descriptor() const noexcept { return descriptor_; }
    std::size_t size() const noexcept { return elements_.size(); }

    std::optional<std::size_t> index_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
    bool is_subset_of(const Window& other) const;

    /// Box bounds when the descriptor is a box or a translate of one by a
    /// lattice vector.
    std::optional<window_kind::Box> as_box() const;

    friend bool operator==(const Window& a, const Window& b) { return a.elements_ == b.elements_; }

private:
    Window(GroupSpec group, std::vector<GroupElement> elements, WindowDescriptor descriptor);

    GroupSpec group_;
    std::vector<GroupElement> elements_;
    WindowDescriptor descriptor_;
};

inline constexpr std::size_t kMaxWindowSize = 1u << 22;

enum class ExhaustionKind { ball, box };

/// Nested exhaustion G_1 ⊆ G_2 ⊆ ... by balls or (lattice) cubes {-n..n}^N.
class Exhaustion {
public:
    Exhaustion(GroupSpec group, ExhaustionKind kind);

    Window level(std::size_t n) const;
    /// G_{n+1} minus G_n.
    std::vector<GroupElement> shell(std::size_t n) const;

    const GroupSpec& group() const noexcept { return group_; }
    ExhaustionKind kind() const noexcept { return kind_; }

private:
    GroupSpec group_;
    ExhaustionKind kind_;
};

} // namespace hullspec
