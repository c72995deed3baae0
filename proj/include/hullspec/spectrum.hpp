#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "hullspec/configuration.hpp"
#include "hullspec/scheme.hpp"
#include "hullspec/section.hpp"

namespace hullspec {

using Complex = std::complex<double>;

/// Eigenvalues of a finite section with multiplicity, sorted by (re, im).
struct SpectrumSample {
    std::vector<Complex> points;
    Window window;
    Boundary boundary;
    std::size_t block_dim = 1;
    Provenance provenance;
};

inline constexpr std::size_t kDeskBound = 2000;

/// Constant c in the backward-error contract
///   sigma_min(lambda I - M) <= c * ||M||_2 * u * n
/// for every returned eigenvalue lambda (u = unit roundoff).
inline constexpr double kBackwardErrorConstant = 64.0;

/// Dense eigenvalues (Hermitian solver when M == M^* exactly, complex
/// Schur otherwise), sorted by (re, im). Throws ConvergenceError carrying
/// the solver's iteration budget.
std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m);
SpectrumSample eigenvalues(const FiniteSection& section, std::size_t desk_bound = kDeskBound);

/// c * ||M||_2 * u * n.
double backward_error_bound(const Eigen::MatrixXcd& m);

/// Largest sigma_min(lambda I - M) over the given eigenvalues.
double max_eigen_residual(const Eigen::MatrixXcd& m, const std::vector<Complex>& lambdas);

/// Union over theta = 2 pi j / theta_samples, j = 0..theta_samples-1, of the
/// eigenvalues of the twisted periodic section on [0, q) (q the period of
/// omega on Z).
SpectrumSample floquet_oracle(const CoefficientScheme& scheme, const Configuration& omega, std::size_t theta_samples);

} // namespace hullspec
