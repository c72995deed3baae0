#include "hullspec/linalg.hpp"

#include <cmath>
#include <complex>
#include <limits>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hullspec/configuration.hpp"
#include "hullspec/error.hpp"

namespace hullspec {

double smallest_singular_value(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().minCoeff();
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().maxCoeff();
}

bool is_hermitian(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i <= j; ++i)
            if (m(i, j) != std::conj(m(j, i))) return false;
    return true;
}

Bandwidth bandwidth(const Eigen::MatrixXcd& m) {
    Bandwidth b;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, j) == std::complex<double>(0.0, 0.0)) continue;
            if (i > j) b.lower = std::max(b.lower, static_cast<std::size_t>(i - j));
            if (j > i) b.upper = std::max(b.upper, static_cast<std::size_t>(j - i));
        }
    return b;
}

namespace {

constexpr double kLanczosTolerance = 1e-10;
constexpr std::size_t kLanczosMaxSteps = 300;

// Deterministic start vector with no special alignment to any basis vector.
Eigen::VectorXcd start_vector(std::size_t n) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t h = mix64(0x5eed5eedULL + i);
        v(static_cast<Eigen::Index>(i)) = {0.5 + static_cast<double>(h >> 11) * 0x1.0p-53, 0.0};
    }
    return v.normalized();
}

// Largest eigenvalue of the symmetric tridiagonal matrix (alpha, beta) by
// Sturm-sequence bisection, searching above `floor`.
double top_tridiagonal_eigenvalue(const std::vector<double>& alpha, const std::vector<double>& beta, double floor) {
    const std::size_t k = alpha.size();
    double lo = alpha[0];
    double hi = alpha[0];
    for (std::size_t i = 0; i < k; ++i) {
        const double left = i > 0 ? std::abs(beta[i - 1]) : 0.0;
        const double right = i + 1 < k ? std::abs(beta[i]) : 0.0;
        lo = std::min(lo, alpha[i] - left - right);
        hi = std::max(hi, alpha[i] + left + right);
    }
    // Ritz values interlace, so the previous top value is a lower bound.
    lo = std::max(lo, std::min(floor - 1e-14 * std::abs(floor), hi));
    // Number of eigenvalues below x.
    const auto below = [&](double x) {
        std::size_t count = 0;
        double q = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double off = i > 0 ? beta[i - 1] * beta[i - 1] : 0.0;
            q = alpha[i] - x - (i > 0 ? off / q : 0.0);
            if (q == 0.0) q = -std::numeric_limits<double>::min();
            if (q < 0.0) ++count;
        }
        return count;
    };
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= 1e-16 * std::abs(hi)) break;
        if (below(mid) == k) hi = mid;
        else lo = mid;
    }
    return hi;
}

// |last component| of the unit eigenvector of (alpha, beta) for its top
// eigenvalue theta, by two steps of inverse iteration with a shift just
// above theta. sigma I - T is then positive definite, so the tridiagonal
// elimination needs no pivoting.
double top_ritz_last_component(const std::vector<double>& alpha, const std::vector<double>& beta, double theta) {
    const std::size_t k = alpha.size();
    if (k == 1) return 1.0;
    const double shift = theta + std::max(std::abs(theta) * 1e-13, std::numeric_limits<double>::min());
    std::vector<double> x(k, 1.0);
    std::vector<double> d(k);
    for (int round = 0; round < 2; ++round) {
        // Forward elimination on sigma I - T (diagonal shift - alpha, off -beta).
        d[0] = shift - alpha[0];
        for (std::size_t i = 1; i < k; ++i) {
            const double m = -beta[i - 1] / d[i - 1];
            d[i] = shift - alpha[i] + m * beta[i - 1];
            x[i] -= m * x[i - 1];
        }
        x[k - 1] /= d[k - 1];
        for (std::size_t i = k - 1; i-- > 0;) x[i] = (x[i] + beta[i] * x[i + 1]) / d[i];
        double norm = 0.0;
        for (double v : x) norm = std::max(norm, std::abs(v));
        for (double& v : x) v /= norm;
    }
    double sq = 0.0;
    for (double v : x) sq += v * v;
    return std::abs(x[k - 1]) / std::sqrt(sq);
}

// Largest eigenvalue of the Hermitian positive operator `apply` by Lanczos
// with full reorthogonalization. Far from the spectrum the singular values
// cluster, and without reorthogonalization the top Ritz value can stall
// short of the largest eigenvalue.
template <typename Apply>
double lanczos_largest(std::size_t n, Apply&& apply) {
    const std::size_t max_steps = std::min(n, kLanczosMaxSteps);
    const auto rows = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd basis(rows, static_cast<Eigen::Index>(std::min<std::size_t>(max_steps, 32)));
    std::vector<double> alpha;
    std::vector<double> beta;
    basis.col(0) = start_vector(n);
    double theta = 0.0;
    for (std::size_t j = 0; j < max_steps; ++j) {
        const auto cols = static_cast<Eigen::Index>(j + 1);
        Eigen::VectorXcd w = apply(basis.col(cols - 1));
        if (!w.allFinite()) return std::numeric_limits<double>::infinity();
        const double a = basis.col(cols - 1).dot(w).real();
        alpha.push_back(a);
        // Two passes of classical Gram-Schmidt against the whole basis.
        for (int pass = 0; pass < 2; ++pass) {
            const Eigen::VectorXcd c = basis.leftCols(cols).adjoint() * w;
            w.noalias() -= basis.leftCols(cols) * c;
        }
        const double b = w.norm();
        theta = top_tridiagonal_eigenvalue(alpha, beta, theta);
        if (b <= 1e-300 || j + 1 == max_steps) break;
        if (b * top_ritz_last_component(alpha, beta, theta) <= kLanczosTolerance * std::abs(theta)) break;
        beta.push_back(b);
        if (cols == basis.cols()) basis.conservativeResize(Eigen::NoChange, std::min<Eigen::Index>(2 * cols, static_cast<Eigen::Index>(max_steps)));
        basis.col(cols) = w / b;
    }
    return theta;
}

// Solves with a gbtrf factorization (LAPACK band storage, pivots 1-based).
// Same operations as gbtrs with one right-hand side; written out because
// the library call carries a large fixed overhead at these sizes.
struct BandedFactor {
    std::size_t n;
    std::size_t kl;
    std::size_t ku;
    std::size_t ldab;
    const std::vector<std::complex<double>>& ab;
    const std::vector<lapack_int>& pivots;
    std::vector<std::complex<double>> inv_diag = {};

    void prepare() {
        inv_diag.resize(n);
        for (std::size_t j = 0; j < n; ++j) inv_diag[j] = 1.0 / at(kl + ku, j);
    }

    std::complex<double> at(std::size_t row, std::size_t col) const { return ab[row + col * ldab]; }

    // B x = b.
    void solve(Eigen::VectorXcd& x) const {
        const std::size_t kd = kl + ku;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const std::size_t lm = std::min(kl, n - j - 1);
            const auto p = static_cast<Eigen::Index>(pivots[j] - 1);
            const auto jj = static_cast<Eigen::Index>(j);
            if (p != jj) std::swap(x(p), x(jj));
            const std::complex<double> xj = x(jj);
            for (std::size_t i = 1; i <= lm; ++i) x(jj + static_cast<Eigen::Index>(i)) -= at(kd + i, j) * xj;
        }
        for (std::size_t j = n; j-- > 0;) {
            const auto jj = static_cast<Eigen::Index>(j);
            x(jj) *= inv_diag[j];
            const std::complex<double> xj = x(jj);
            const std::size_t reach = std::min(kd, j);
            for (std::size_t i = 1; i <= reach; ++i) x(jj - static_cast<Eigen::Index>(i)) -= at(kd - i, j) * xj;
        }
    }

    // B^* x = b.
    void solve_adjoint(Eigen::VectorXcd& x) const {
        const std::size_t kd = kl + ku;
        for (std::size_t j = 0; j < n; ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            std::complex<double> sum = x(jj);
            const std::size_t reach = std::min(kd, j);
            for (std::size_t i = 1; i <= reach; ++i) sum -= std::conj(at(kd - i, j)) * x(jj - static_cast<Eigen::Index>(i));
            x(jj) = sum * std::conj(inv_diag[j]);
        }
        for (std::size_t j = n - 1; j-- > 0;) {
            const std::size_t lm = std::min(kl, n - j - 1);
            const auto jj = static_cast<Eigen::Index>(j);
            std::complex<double> sum = x(jj);
            for (std::size_t i = 1; i <= lm; ++i) sum -= std::conj(at(kd + i, j)) * x(jj + static_cast<Eigen::Index>(i));
            x(jj) = sum;
            const auto p = static_cast<Eigen::Index>(pivots[j] - 1);
            if (p != jj) std::swap(x(p), x(jj));
        }
    }
};

double sigma_from_theta(double theta) {
    if (!std::isfinite(theta)) return 0.0;
    if (theta <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::sqrt(theta);
}

} // namespace

ResolventScanner::ResolventScanner(const Eigen::MatrixXcd& m) : n_(static_cast<std::size_t>(m.rows())) {
    if (m.rows() != m.cols()) throw DomainError("resolvent scan needs a square matrix");
    band_ = bandwidth(m);
    banded_ = n_ > 0 && 4 * (band_.lower + band_.upper + 1) < n_;
    if (banded_) {
        matrix_ = m;
    } else if (n_ > 0) {
        Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m, false);
        if (schur.info() != Eigen::Success)
            throw ConvergenceError(static_cast<std::size_t>(schur.getMaxIterations()), "complex Schur decomposition failed");
        schur_t_ = schur.matrixT().triangularView<Eigen::Upper>();
    }
}

double ResolventScanner::sigma_min(std::complex<double> z) const {
    if (n_ == 0) return 0.0;
    return banded_ ? sigma_min_banded(z) : sigma_min_schur(z);
}

double ResolventScanner::sigma_min_banded(std::complex<double> z) const {
    const auto n = static_cast<lapack_int>(n_);
    const auto kl = static_cast<lapack_int>(band_.lower);
    const auto ku = static_cast<lapack_int>(band_.upper);
    const lapack_int ldab = 2 * kl + ku + 1;
    std::vector<std::complex<double>> ab(static_cast<std::size_t>(ldab) * n_, 0.0);
    for (lapack_int j = 0; j < n; ++j) {
        const lapack_int lo = std::max<lapack_int>(0, j - ku);
        const lapack_int hi = std::min<lapack_int>(n - 1, j + kl);
        for (lapack_int i = lo; i <= hi; ++i) {
            std::complex<double> v = -matrix_(i, j);
            if (i == j) v += z;
            ab[static_cast<std::size_t>(kl + ku + i - j + j * ldab)] = v;
        }
    }
    std::vector<lapack_int> pivots(n_);
    const lapack_int info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n, n, kl, ku, ab.data(), ldab, pivots.data());
    if (info > 0) return 0.0;
    if (info < 0) throw DomainError("banded LU rejected its arguments");

    BandedFactor factor{n_, band_.lower, band_.upper, static_cast<std::size_t>(ldab), ab, pivots};
    factor.prepare();
    const auto apply = [&](const Eigen::VectorXcd& v) {
        Eigen::VectorXcd x = v;
        factor.solve_adjoint(x);
        factor.solve(x);
        return x;
    };
    return sigma_from_theta(lanczos_largest(n_, apply));
}

double ResolventScanner::sigma_min_schur(std::complex<double> z) const {
    Eigen::MatrixXcd b = -schur_t_;
    b.diagonal().array() += z;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        if (b(i, i) == std::complex<double>(0.0, 0.0)) return 0.0;
    const auto upper = b.triangularView<Eigen::Upper>();
    const auto apply = [&](const Eigen::VectorXcd& v) {
        Eigen::VectorXcd y = upper.adjoint().solve(v);
        return Eigen::VectorXcd(upper.solve(y));
    };
    return sigma_from_theta(lanczos_largest(n_, apply));
}

} // namespace hullspec
