#include "hullspec/scheme.hpp"

#include <algorithm>
#include <cstring>
#include <set>

#include "hullspec/error.hpp"

namespace hullspec {

namespace {

constexpr std::size_t kMaxLocalPatterns = std::size_t{1} << 16;

double spectral_norm(const Block& b) {
    if (b.size() == 0) return 0.0;
    if (b.size() == 1) return std::abs(b(0, 0));
    return Eigen::JacobiSVD<Block>(b).singularValues()(0);
}

} // namespace

CoefficientScheme::CoefficientScheme(std::string name, GroupSpec group, Alphabet alphabet,
                                     std::vector<GroupElement> offsets, std::size_t locality_radius,
                                     std::size_t block_dim, CoefficientMap coeff)
    : name_(std::move(name)), group_(std::move(group)), alphabet_(std::move(alphabet)), offsets_(std::move(offsets)),
      radius_(locality_radius), block_dim_(block_dim), coeff_(std::move(coeff)),
      local_window_(Window::ball(group_, locality_radius)) {
    if (block_dim_ == 0) throw DomainError("block dimension must be positive");
    if (offsets_.empty()) throw DomainError("a scheme needs at least one offset");
    if (std::set<GroupElement>(offsets_.begin(), offsets_.end()).size() != offsets_.size())
        throw DomainError("offsets must be distinct");
    for (const auto& s : offsets_) {
        group_.require(s);
        propagation_ = std::max(propagation_, group_.word_length(s));
    }

    // Max over every local pattern of the full shift: an upper bound for any hull.
    std::size_t total = 1;
    for (std::size_t i = 0; i < local_window_.size(); ++i) {
        total *= alphabet_.size();
        if (total > kMaxLocalPatterns) throw ResourceError("too many local patterns to bound the scheme norm");
    }
    std::vector<double> best(offsets_.size(), 0.0);
    std::vector<Letter> letters(local_window_.size(), 0);
    for (std::size_t count = 0; count < total; ++count) {
        const Pattern local(local_window_, letters);
        for (std::size_t s = 0; s < offsets_.size(); ++s) best[s] = std::max(best[s], spectral_norm(coefficient(s, local)));
        for (std::size_t i = letters.size(); i > 0; --i) {
            if (++letters[i - 1] < alphabet_.size()) break;
            letters[i - 1] = 0;
        }
    }
    for (double b : best) bound_ += b;
}

Block CoefficientScheme::coefficient(std::size_t offset_index, const Pattern& local) const {
    Block b = coeff_(offset_index, local);
    if (b.rows() != static_cast<Eigen::Index>(block_dim_) || b.cols() != static_cast<Eigen::Index>(block_dim_))
        throw DomainError("scheme '" + name_ + "' returned a block of the wrong size");
    return b;
}

Pattern CoefficientScheme::local_pattern(const Configuration& omega, const GroupElement& k) const {
    return pattern_at(omega, local_window_, k);
}

std::optional<std::size_t> CoefficientScheme::offset_between(const GroupElement& k, const GroupElement& h) const {
    const GroupElement s = compose(h, inverse(k));
    for (std::size_t i = 0; i < offsets_.size(); ++i)
        if (offsets_[i] == s) return i;
    return std::nullopt;
}

Block entry(const CoefficientScheme& scheme, const Configuration& omega, const GroupElement& k, const GroupElement& h) {
    const auto s = scheme.offset_between(k, h);
    const auto d = static_cast<Eigen::Index>(scheme.block_dim());
    if (!s) return Block::Zero(d, d);
    return scheme.coefficient(*s, scheme.local_pattern(omega, k));
}

bool verify_equivariance(const CoefficientScheme& scheme, const Configuration& omega, const GroupElement& g,
                         const Window& window) {
    const Configuration moved = shift(omega, g);
    const GroupElement g_inv = inverse(g);
    const auto same = [&](const GroupElement& k, const GroupElement& h) {
        const Block lhs = entry(scheme, moved, k, h);
        const Block rhs = entry(scheme, omega, compose(k, g), compose(h, g));
        if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
        // bit-for-bit, no tolerance
        return std::memcmp(lhs.data(), rhs.data(), sizeof(Complex) * static_cast<std::size_t>(lhs.size())) == 0;
    };
    // Entries vanish off the offsets, so only pairs where either side sits
    // on an offset can differ: h = s + k, or h + g = s + (k + g).
    for (const auto& k : window.elements()) {
        const GroupElement kg = compose(k, g);
        for (const auto& s : scheme.offsets()) {
            const GroupElement h = compose(s, k);
            if (window.contains(h) && !same(k, h)) return false;
            const GroupElement h2 = compose(compose(s, kg), g_inv);
            if (window.contains(h2) && !same(k, h2)) return false;
        }
    }
    return true;
}

double norm_upper_bound(const CoefficientScheme& scheme) { return scheme.bound(); }

} // namespace hullspec
