#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "hullspec/configuration.hpp"
#include "hullspec/scheme.hpp"
#include "hullspec/section.hpp"

namespace hullspec {

struct Rectangle {
    double re_min = 0.0;
    double re_max = 0.0;
    double im_min = 0.0;
    double im_max = 0.0;
};

struct Resolution {
    std::size_t n_re = 0;
    std::size_t n_im = 0;
};

/// Nodes are re_min + i (re_max - re_min) / (n_re - 1) (both ends included;
/// a single node sits at re_min), likewise for im. sigma_min is stored with
/// the imaginary index outer: sigma_min[j * n_re + i].
struct PseudospectrumGrid {
    Rectangle rectangle;
    Resolution resolution;
    std::vector<double> sigma_min;
    Window window;
    Boundary boundary;
    Provenance provenance;

    std::complex<double> node(std::size_t i, std::size_t j) const;
    double at(std::size_t i, std::size_t j) const { return sigma_min[j * resolution.n_re + i]; }
    std::size_t size() const noexcept { return sigma_min.size(); }
};

/// Upper limit on nodes * n^2 for one grid.
inline constexpr double kGridBudget = 2e10;

/// 1 / sigma_min, clamped at 1e16 for nodes on (or numerically on) the
/// spectrum; `clamped` marks those.
struct ResolventNorm {
    double value;
    bool clamped;
};
ResolventNorm resolvent_norm(double sigma_min);

/// sigma_min(lambda I - M) at every node. Nodes are split into contiguous
/// chunks across `threads` workers; each node is computed independently so
/// the result does not depend on the thread count.
std::vector<double> sigma_min_grid(const Eigen::MatrixXcd& m, const Rectangle& rectangle,
                                   const Resolution& resolution, std::size_t threads = 1,
                                   double budget = kGridBudget);

PseudospectrumGrid pseudospectrum_grid(const CoefficientScheme& scheme, const Configuration& omega,
                                       const Window& window, Boundary boundary, const Rectangle& rectangle,
                                       const Resolution& resolution, std::size_t threads = 1,
                                       double budget = kGridBudget);
PseudospectrumGrid pseudospectrum_grid(const FiniteSection& section, const Rectangle& rectangle,
                                       const Resolution& resolution, std::size_t threads = 1,
                                       double budget = kGridBudget);

/// Number of nodes with sigma_min < epsilon.
std::size_t sublevel_count(const PseudospectrumGrid& grid, double epsilon);

/// Max |a - b| over nodes where both values exceed `cutoff`. Grids must share
/// rectangle and resolution.
double max_grid_deviation(const PseudospectrumGrid& a, const PseudospectrumGrid& b, double cutoff);

} // namespace hullspec
