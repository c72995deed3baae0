#include "hullspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hullspec/error.hpp"
#include "hullspec/linalg.hpp"

namespace hullspec {

namespace {

void sort_points(std::vector<Complex>& points) {
    std::sort(points.begin(), points.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

} // namespace

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw DomainError("eigenvalues of a non-square matrix");
    std::vector<Complex> out;
    if (m.rows() == 0) return out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    if (is_hermitian(m)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw ConvergenceError(static_cast<std::size_t>(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>::m_maxIterations) *
                                       static_cast<std::size_t>(m.rows()),
                                   "Hermitian eigensolver did not converge");
        for (Eigen::Index i = 0; i < m.rows(); ++i) out.emplace_back(solver.eigenvalues()(i), 0.0);
    } else {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
        if (solver.info() != Eigen::Success)
            throw ConvergenceError(static_cast<std::size_t>(solver.getMaxIterations()),
                                   "complex eigensolver did not converge");
        for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()(i));
    }
    sort_points(out);
    return out;
}

SpectrumSample eigenvalues(const FiniteSection& section, std::size_t desk_bound) {
    const auto n = static_cast<std::size_t>(section.matrix.rows());
    if (n > desk_bound)
        throw ResourceError("section of size " + std::to_string(n) + " exceeds the dense bound " +
                            std::to_string(desk_bound));
    return SpectrumSample{eigenvalues(section.matrix), section.window, section.boundary, section.block_dim,
                          section.provenance};
}

double backward_error_bound(const Eigen::MatrixXcd& m) {
    const double u = std::numeric_limits<double>::epsilon() / 2.0;
    return kBackwardErrorConstant * largest_singular_value(m) * u * static_cast<double>(m.rows());
}

double max_eigen_residual(const Eigen::MatrixXcd& m, const std::vector<Complex>& lambdas) {
    double worst = 0.0;
    for (const auto& lambda : lambdas) {
        Eigen::MatrixXcd b = -m;
        b.diagonal().array() += lambda;
        worst = std::max(worst, smallest_singular_value(b));
    }
    return worst;
}

SpectrumSample floquet_oracle(const CoefficientScheme& scheme, const Configuration& omega, std::size_t theta_samples) {
    const GroupSpec& group = omega.group();
    if (!group.is_lattice() || group.rank() != 1) throw DomainError("Floquet oracle is implemented on Z only");
    const auto periods = omega.periods();
    if (!periods) throw DomainError("Floquet oracle needs a periodic configuration, got " + omega.describe());
    if (theta_samples == 0) throw DomainError("Floquet oracle needs at least one theta sample");
    const std::int64_t q = (*periods)[0];
    if (scheme.propagation() > static_cast<std::size_t>(q))
        throw DomainError("scheme offsets reach beyond one period");

    const Window cell = Window::interval(group, 0, static_cast<std::size_t>(q));
    SpectrumSample out{{}, cell, Boundary::periodic, scheme.block_dim(), {scheme.name(), omega.describe()}};
    for (std::size_t j = 0; j < theta_samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(theta_samples);
        const FiniteSection symbol = twisted_section(scheme, omega, cell, {theta});
        const auto points = eigenvalues(symbol.matrix);
        out.points.insert(out.points.end(), points.begin(), points.end());
    }
    sort_points(out.points);
    return out;
}

} // namespace hullspec
