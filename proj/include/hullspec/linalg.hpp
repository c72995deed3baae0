#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace hullspec {

/// Full singular value decomposition (divide and conquer).
double smallest_singular_value(const Eigen::MatrixXcd& m);
double largest_singular_value(const Eigen::MatrixXcd& m);

/// Exact test M == M^*.
bool is_hermitian(const Eigen::MatrixXcd& m);

/// Lower/upper bandwidth of the nonzero pattern.
struct Bandwidth {
    std::size_t lower = 0;
    std::size_t upper = 0;
};
Bandwidth bandwidth(const Eigen::MatrixXcd& m);

/// Repeated evaluation of sigma_min(z I - M) for one square matrix M.
///
/// Each call runs Lanczos on (B^* B)^{-1}, B = z I - M, with full
/// reorthogonalization, stopping on the residual of the top Ritz pair. The inverse is applied through a factorization of B: a
/// banded LU (LAPACK gbtrf) when M is narrow-banded, otherwise the complex
/// Schur form M = Q T Q^* computed once, so B is triangular up to unitary
/// similarity. Results depend on z only, never on call order.
class ResolventScanner {
public:
    explicit ResolventScanner(const Eigen::MatrixXcd& m);

    double sigma_min(std::complex<double> z) const;
    bool banded() const noexcept { return banded_; }
    std::size_t size() const noexcept { return n_; }

private:
    double sigma_min_banded(std::complex<double> z) const;
    double sigma_min_schur(std::complex<double> z) const;

    std::size_t n_;
    bool banded_ = false;
    Bandwidth band_;
    Eigen::MatrixXcd matrix_;
    Eigen::MatrixXcd schur_t_;
};

} // namespace hullspec
