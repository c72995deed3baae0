#pragma once

#include <complex>
#include <vector>

namespace hullspec {

/// sup over p in P of min over q in Q of |p - q|. Throws on empty input.
double directed_distance(const std::vector<std::complex<double>>& p, const std::vector<std::complex<double>>& q);

/// max of both directed distances.
double hausdorff_distance(const std::vector<std::complex<double>>& p, const std::vector<std::complex<double>>& q);

/// Points of `base` lying within `delta` of every set in `others`. Used to
/// drop finite-section eigenvalues that move when the window grows.
std::vector<std::complex<double>> persistent_points(const std::vector<std::complex<double>>& base,
                                                    const std::vector<std::vector<std::complex<double>>>& others,
                                                    double delta);

} // namespace hullspec
