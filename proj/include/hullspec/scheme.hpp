#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hullspec/alphabet.hpp"
#include "hullspec/configuration.hpp"
#include "hullspec/group.hpp"
#include "hullspec/pattern.hpp"
#include "hullspec/window.hpp"

namespace hullspec {

using Complex = std::complex<double>;
using Block = Eigen::MatrixXcd;

/// coeff(s, local pattern on ball(r)) -> d x d block. Must be a pure
/// function of its arguments.
using CoefficientMap = std::function<Block(std::size_t offset_index, const Pattern& local)>;

/// An equivariant band-operator family over a hull:
///   A(omega)[k, s + k] = coeff(s, pattern of shift(omega, k) on ball(r)),
/// zero off the offsets. With V_g x = (x_{h+g})_h this gives
///   entry(shift(omega, g), k, h) = entry(omega, k + g, h + g),
/// i.e. A(alpha(g) omega) = V_g A(omega) V_{-g}, on any group.
class CoefficientScheme {
public:
    CoefficientScheme(std::string name, GroupSpec group, Alphabet alphabet, std::vector<GroupElement> offsets,
                      std::size_t locality_radius, std::size_t block_dim, CoefficientMap coeff);

    const std::string& name() const noexcept { return name_; }
    const GroupSpec& group() const noexcept { return group_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<GroupElement>& offsets() const noexcept { return offsets_; }
    std::size_t locality_radius() const noexcept { return radius_; }
    std::size_t block_dim() const noexcept { return block_dim_; }
    /// Max word length over the offsets.
    std::size_t propagation() const noexcept { return propagation_; }
    const Window& local_window() const noexcept { return local_window_; }
    /// Sum over offsets of the max spectral norm of coeff(s, .) over all
    /// local patterns.
    double bound() const noexcept { return bound_; }

    Block coefficient(std::size_t offset_index, const Pattern& local) const;
    /// Pattern of shift(omega, k) on ball(r).
    Pattern local_pattern(const Configuration& omega, const GroupElement& k) const;
    /// Index of the offset s with s + k == h, if any.
    std::optional<std::size_t> offset_between(const GroupElement& k, const GroupElement& h) const;

private:
    std::string name_;
    GroupSpec group_;
    Alphabet alphabet_;
    std::vector<GroupElement> offsets_;
    std::size_t radius_;
    std::size_t block_dim_;
    CoefficientMap coeff_;
    std::size_t propagation_ = 0;
    Window local_window_;
    double bound_ = 0.0;
};

Block entry(const CoefficientScheme& scheme, const Configuration& omega, const GroupElement& k, const GroupElement& h);

/// Bit-exact check of entry(shift(omega, g), k, h) == entry(omega, k+g, h+g)
/// for all k, h in W. Pairs on which neither side has an offset are zero by
/// construction and skipped.
bool verify_equivariance(const CoefficientScheme& scheme, const Configuration& omega, const GroupElement& g,
                         const Window& window);

double norm_upper_bound(const CoefficientScheme& scheme);

} // namespace hullspec
