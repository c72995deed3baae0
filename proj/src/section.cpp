#include "hullspec/section.hpp"

#include <cmath>

#include "hullspec/error.hpp"
#include "hullspec/linalg.hpp"

namespace hullspec {

std::string to_string(Boundary b) { return b == Boundary::truncate ? "truncate" : "periodic"; }

Boundary boundary_from_string(const std::string& s) {
    if (s == "truncate") return Boundary::truncate;
    if (s == "periodic") return Boundary::periodic;
    throw DomainError("unknown boundary '" + s + "'");
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

window_kind::Box periodic_box(const Configuration& omega, const Window& window) {
    if (!window.group().is_lattice()) throw DomainError("periodic boundary needs a lattice group");
    const auto box = window.as_box();
    if (!box) throw DomainError("periodic boundary needs a box window");
    const auto periods = omega.periods();
    if (!periods) throw DomainError("periodic boundary needs a periodic configuration");
    for (std::size_t i = 0; i < periods->size(); ++i) {
        const std::int64_t extent = box->upper[i] - box->lower[i] + 1;
        if (extent % (*periods)[i] != 0)
            throw DomainError("box extent " + std::to_string(extent) + " is not a multiple of the period " +
                              std::to_string((*periods)[i]));
    }
    return *box;
}

FiniteSection assemble_wrapped(const CoefficientScheme& scheme, const Configuration& omega, const Window& window,
                               const window_kind::Box& box, const std::vector<double>& theta) {
    const auto d = static_cast<Eigen::Index>(scheme.block_dim());
    const auto n = static_cast<Eigen::Index>(window.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n * d, n * d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& k = window.elements()[static_cast<std::size_t>(i)];
        const Pattern local = scheme.local_pattern(omega, k);
        for (std::size_t s = 0; s < scheme.offsets().size(); ++s) {
            GroupElement h = compose(scheme.offsets()[s], k);
            double phase = 0.0;
            for (std::size_t axis = 0; axis < box.lower.size(); ++axis) {
                const std::int64_t extent = box.upper[axis] - box.lower[axis] + 1;
                const std::int64_t wraps = floor_div(h[axis] - box.lower[axis], extent);
                h[axis] -= wraps * extent;
                if (!theta.empty()) phase += static_cast<double>(wraps) * theta[axis];
            }
            const auto j = static_cast<Eigen::Index>(*window.index_of(h));
            Block b = scheme.coefficient(s, local);
            if (phase != 0.0) b *= std::polar(1.0, phase);
            m.block(i * d, j * d, d, d) += b;
        }
    }
    return {window, Boundary::periodic, scheme.block_dim(), std::move(m), {scheme.name(), omega.describe()}};
}

} // namespace

Eigen::MatrixXcd compression(const CoefficientScheme& scheme, const Configuration& omega, const Window& rows,
                             const Window& cols) {
    const auto d = static_cast<Eigen::Index>(scheme.block_dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()) * d,
                                                static_cast<Eigen::Index>(cols.size()) * d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& k = rows.elements()[i];
        std::optional<Pattern> local;
        for (std::size_t s = 0; s < scheme.offsets().size(); ++s) {
            const auto j = cols.index_of(compose(scheme.offsets()[s], k));
            if (!j) continue;
            if (!local) local = scheme.local_pattern(omega, k);
            m.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(*j) * d, d, d) =
                scheme.coefficient(s, *local);
        }
    }
    return m;
}

FiniteSection section(const CoefficientScheme& scheme, const Configuration& omega, const Window& window,
                      Boundary boundary) {
    if (!(window.group() == scheme.group()) || !(omega.group() == scheme.group()))
        throw DomainError("scheme, configuration and window must share a group");
    if (boundary == Boundary::periodic) return assemble_wrapped(scheme, omega, window, periodic_box(omega, window), {});
    return {window, boundary, scheme.block_dim(), compression(scheme, omega, window, window),
            {scheme.name(), omega.describe()}};
}

FiniteSection twisted_section(const CoefficientScheme& scheme, const Configuration& omega, const Window& window,
                              const std::vector<double>& theta) {
    const auto box = periodic_box(omega, window);
    if (theta.size() != box.lower.size()) throw DomainError("one Bloch phase per axis required");
    return assemble_wrapped(scheme, omega, window, box, theta);
}

double window_seminorm(const CoefficientScheme& scheme, const Configuration& omega, const Configuration& nu,
                       std::size_t m) {
    const Window inner = Window::ball(scheme.group(), m);
    const Window outer = Window::ball(scheme.group(), m + scheme.propagation());
    const Eigen::MatrixXcd left = compression(scheme, omega, inner, outer) - compression(scheme, nu, inner, outer);
    const Eigen::MatrixXcd right = compression(scheme, omega, outer, inner) - compression(scheme, nu, outer, inner);
    return largest_singular_value(left) + largest_singular_value(right);
}

} // namespace hullspec
