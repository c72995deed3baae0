#include "hullspec/pseudospectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "hullspec/error.hpp"
#include "hullspec/linalg.hpp"

namespace hullspec {

namespace {

constexpr double kResolventClamp = 1e16;

double coordinate(double lo, double hi, std::size_t i, std::size_t n) {
    if (n <= 1) return lo;
    return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(n - 1);
}

std::complex<double> node_of(const Rectangle& r, const Resolution& res, std::size_t i, std::size_t j) {
    return {coordinate(r.re_min, r.re_max, i, res.n_re), coordinate(r.im_min, r.im_max, j, res.n_im)};
}

void check_budget(std::size_t nodes, std::size_t size, double budget) {
    const double n = static_cast<double>(size);
    if (static_cast<double>(nodes) * n * n <= budget) return;
    const auto side = static_cast<std::size_t>(std::floor(std::sqrt(budget / std::max(1.0, n * n))));
    throw ResourceError("grid of " + std::to_string(nodes) + " nodes on a section of size " + std::to_string(size) +
                        " exceeds the budget; try a resolution of at most " + std::to_string(side) + " x " +
                        std::to_string(side));
}

} // namespace

std::complex<double> PseudospectrumGrid::node(std::size_t i, std::size_t j) const {
    return node_of(rectangle, resolution, i, j);
}

ResolventNorm resolvent_norm(double sigma_min) {
    if (sigma_min <= 1.0 / kResolventClamp) return {kResolventClamp, true};
    return {1.0 / sigma_min, false};
}

std::vector<double> sigma_min_grid(const Eigen::MatrixXcd& m, const Rectangle& rectangle,
                                   const Resolution& resolution, std::size_t threads, double budget) {
    if (resolution.n_re == 0 || resolution.n_im == 0) throw DomainError("grid resolution must be positive");
    if (!(rectangle.re_min <= rectangle.re_max) || !(rectangle.im_min <= rectangle.im_max))
        throw DomainError("grid rectangle has inverted bounds");
    const std::size_t nodes = resolution.n_re * resolution.n_im;
    check_budget(nodes, static_cast<std::size_t>(m.rows()), budget);

    const ResolventScanner scanner(m);
    std::vector<double> out(nodes, 0.0);
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, nodes);
    const std::size_t chunk = (nodes + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    const auto run = [&](std::size_t w) {
        try {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(nodes, begin + chunk);
            for (std::size_t k = begin; k < end; ++k)
                out[k] = scanner.sigma_min(node_of(rectangle, resolution, k % resolution.n_re, k / resolution.n_re));
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

PseudospectrumGrid pseudospectrum_grid(const FiniteSection& section, const Rectangle& rectangle,
                                       const Resolution& resolution, std::size_t threads, double budget) {
    return PseudospectrumGrid{rectangle,
                              resolution,
                              sigma_min_grid(section.matrix, rectangle, resolution, threads, budget),
                              section.window,
                              section.boundary,
                              section.provenance};
}

PseudospectrumGrid pseudospectrum_grid(const CoefficientScheme& scheme, const Configuration& omega,
                                       const Window& window, Boundary boundary, const Rectangle& rectangle,
                                       const Resolution& resolution, std::size_t threads, double budget) {
    if (resolution.n_re == 0 || resolution.n_im == 0) throw DomainError("grid resolution must be positive");
    check_budget(resolution.n_re * resolution.n_im, window.size() * scheme.block_dim(), budget);
    return pseudospectrum_grid(section(scheme, omega, window, boundary), rectangle, resolution, threads, budget);
}

std::size_t sublevel_count(const PseudospectrumGrid& grid, double epsilon) {
    return static_cast<std::size_t>(
        std::count_if(grid.sigma_min.begin(), grid.sigma_min.end(), [&](double s) { return s < epsilon; }));
}

double max_grid_deviation(const PseudospectrumGrid& a, const PseudospectrumGrid& b, double cutoff) {
    if (a.resolution.n_re != b.resolution.n_re || a.resolution.n_im != b.resolution.n_im ||
        a.sigma_min.size() != b.sigma_min.size())
        throw DomainError("grids have different resolutions");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.sigma_min.size(); ++k)
        if (a.sigma_min[k] > cutoff && b.sigma_min[k] > cutoff)
            worst = std::max(worst, std::abs(a.sigma_min[k] - b.sigma_min[k]));
    return worst;
}

} // namespace hullspec
