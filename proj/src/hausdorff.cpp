#include "hullspec/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hullspec/error.hpp"

namespace hullspec {

namespace {

double nearest(std::complex<double> x, const std::vector<std::complex<double>>& q) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : q) best = std::min(best, std::abs(x - y));
    return best;
}

} // namespace

double directed_distance(const std::vector<std::complex<double>>& p, const std::vector<std::complex<double>>& q) {
    if (p.empty() || q.empty()) throw DomainError("Hausdorff distance of an empty point set");
    double worst = 0.0;
    for (const auto& x : p) worst = std::max(worst, nearest(x, q));
    return worst;
}

double hausdorff_distance(const std::vector<std::complex<double>>& p, const std::vector<std::complex<double>>& q) {
    return std::max(directed_distance(p, q), directed_distance(q, p));
}

std::vector<std::complex<double>> persistent_points(const std::vector<std::complex<double>>& base,
                                                    const std::vector<std::vector<std::complex<double>>>& others,
                                                    double delta) {
    std::vector<std::complex<double>> out;
    for (const auto& x : base) {
        const bool keep = std::all_of(others.begin(), others.end(), [&](const auto& set) {
            return !set.empty() && nearest(x, set) <= delta;
        });
        if (keep) out.push_back(x);
    }
    return out;
}

} // namespace hullspec
