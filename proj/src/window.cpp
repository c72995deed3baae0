#include "hullspec/window.hpp"

#include <algorithm>

#include "hullspec/error.hpp"

namespace hullspec {

Window::Window(GroupSpec group, std::vector<GroupElement> elements, WindowDescriptor descriptor)
    : group_(std::move(group)), elements_(std::move(elements)), descriptor_(std::move(descriptor)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

Window Window::ball(const GroupSpec& group, std::size_t radius) {
    std::vector<GroupElement> elements;
    for (std::size_t r = 0; r <= radius; ++r) {
        auto layer = group.sphere(r);
        elements.insert(elements.end(), layer.begin(), layer.end());
        if (elements.size() > kMaxWindowSize)
            throw ResourceError("ball of radius " + std::to_string(radius) + " exceeds the window size bound");
    }
    return Window(group, std::move(elements), window_kind::Ball{radius});
}

Window Window::box(const GroupSpec& group, std::vector<std::int64_t> lower, std::vector<std::int64_t> upper) {
    if (!group.is_lattice()) throw DomainError("box windows need a lattice group");
    if (lower.size() != group.rank() || upper.size() != group.rank())
        throw DomainError("box bounds must have one entry per axis");
    std::size_t total = 1;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (upper[i] < lower[i]) throw DomainError("empty box");
        total *= static_cast<std::size_t>(upper[i] - lower[i] + 1);
        if (total > kMaxWindowSize) throw ResourceError("box exceeds the window size bound");
    }
    std::vector<GroupElement> elements;
    elements.reserve(total);
    std::vector<std::int64_t> coords = lower;
    for (;;) {
        elements.push_back(GroupElement::lattice(coords));
        std::size_t axis = coords.size();
        while (axis > 0) {
            --axis;
            if (++coords[axis] <= upper[axis]) break;
            coords[axis] = lower[axis];
            if (axis == 0) {
                axis = coords.size() + 1;
                break;
            }
        }
        if (axis == coords.size() + 1) break;
    }
    return Window(group, std::move(elements), window_kind::Box{std::move(lower), std::move(upper)});
}

Window Window::centered_box(const GroupSpec& group, const std::vector<std::int64_t>& halfwidths) {
    std::vector<std::int64_t> lower(halfwidths.size());
    for (std::size_t i = 0; i < halfwidths.size(); ++i) lower[i] = -halfwidths[i];
    return box(group, lower, halfwidths);
}

Window Window::interval(const GroupSpec& group, std::int64_t first, std::size_t length) {
    if (group.kind() != GroupKind::lattice || group.rank() != 1)
        throw DomainError("intervals live in Z");
    if (length == 0) throw DomainError("empty interval");
    return box(group, {first}, {first + static_cast<std::int64_t>(length) - 1});
}

Window Window::translate(const Window& base, const GroupElement& g) {
    base.group().require(g);
    std::vector<GroupElement> elements;
    elements.reserve(base.size());
    for (const auto& w : base.elements()) elements.push_back(compose(w, g));
    return Window(base.group(), std::move(elements),
                  window_kind::Translate{std::make_shared<const Window>(base), g});
}

Window Window::from_elements(const GroupSpec& group, std::vector<GroupElement> elements) {
    for (const auto& g : elements) group.require(g);
    return Window(group, std::move(elements), window_kind::Explicit{});
}

std::optional<std::size_t> Window::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Window::is_subset_of(const Window& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::optional<window_kind::Box> Window::as_box() const {
    if (const auto* b = std::get_if<window_kind::Box>(&descriptor_)) return *b;
    if (const auto* t = std::get_if<window_kind::Translate>(&descriptor_)) {
        auto inner = t->base->as_box();
        if (!inner || t->offset.kind() != GroupKind::lattice) return std::nullopt;
        for (std::size_t i = 0; i < inner->lower.size(); ++i) {
            inner->lower[i] += t->offset[i];
            inner->upper[i] += t->offset[i];
        }
        return inner;
    }
    return std::nullopt;
}

Exhaustion::Exhaustion(GroupSpec group, ExhaustionKind kind) : group_(std::move(group)), kind_(kind) {
    if (kind_ == ExhaustionKind::box && !group_.is_lattice())
        throw DomainError("box exhaustion needs a lattice group");
}

Window Exhaustion::level(std::size_t n) const {
    if (kind_ == ExhaustionKind::ball) return Window::ball(group_, n);
    return Window::centered_box(group_, std::vector<std::int64_t>(group_.rank(), static_cast<std::int64_t>(n)));
}

std::vector<GroupElement> Exhaustion::shell(std::size_t n) const {
    const auto inner = level(n);
    const auto outer = level(n + 1);
    std::vector<GroupElement> out;
    std::set_difference(outer.elements().begin(), outer.elements().end(), inner.elements().begin(),
                        inner.elements().end(), std::back_inserter(out));
    return out;
}

} // namespace hullspec
