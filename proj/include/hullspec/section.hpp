#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hullspec/configuration.hpp"
#include "hullspec/scheme.hpp"
#include "hullspec/window.hpp"

namespace hullspec {

enum class Boundary { truncate, periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

struct Provenance {
    std::string scheme;
    std::string configuration;
};

/// Compression of A(omega) to a window: rows and columns follow the
/// window's canonical element order, d x d blocks contiguous.
struct FiniteSection {
    Window window;
    Boundary boundary;
    std::size_t block_dim;
    Eigen::MatrixXcd matrix;
    Provenance provenance;
};

/// Truncate: P_W A(omega) P_W. Periodic (lattice boxes only): offsets wrap
/// modulo the box, which requires omega periodic with periods dividing the
/// box dimensions.
FiniteSection section(const CoefficientScheme& scheme, const Configuration& omega, const Window& window,
                      Boundary boundary);

/// Periodic section whose wrapped entries pick up exp(i sum_j w_j theta_j),
/// w_j the number of wraps along axis j (Floquet-Bloch twist).
FiniteSection twisted_section(const CoefficientScheme& scheme, const Configuration& omega, const Window& box,
                              const std::vector<double>& theta);

/// Rows `rows`, columns `cols` of A(omega) (no wrapping).
Eigen::MatrixXcd compression(const CoefficientScheme& scheme, const Configuration& omega, const Window& rows,
                             const Window& cols);

/// ||P_m (A(w) - A(v)) P_M|| + ||P_M (A(w) - A(v)) P_m||, M = m + propagation.
double window_seminorm(const CoefficientScheme& scheme, const Configuration& omega, const Configuration& nu,
                       std::size_t m);

} // namespace hullspec
