#ifndef ICHAIN_CONTOURS_HPP
#define ICHAIN_CONTOURS_HPP

// Minus-run decomposition of a configuration and the block-erasure map used
// by the Peierls estimate p(B) <= exp(-beta (I_left + I_{right+1})).

#include <cmath>
#include <string>
#include <vector>

#include "ichain/block.hpp"
#include "ichain/errors.hpp"
#include "ichain/exact.hpp"
#include "ichain/model.hpp"

namespace ichain {

struct ContourDecomposition {
    std::vector<int> minus_set;       // sites with spin -1, ascending
    std::vector<Block> blocks;        // maximal minus runs inside the volume, ascending
    std::vector<bool> touches_sea;    // per block: merges with a minus exterior
    std::vector<int> boundary_bonds;  // bonds x with s(x-1) != s(x), x in [-n, n+1]
};

inline ContourDecomposition decompose(const Configuration& c) {
    const int n = c.volume().n;
    ContourDecomposition d;
    for (int x = -n; x <= n; ++x) {
        if (c.at(x) != Spin::minus) continue;
        d.minus_set.push_back(x);
        if (!d.blocks.empty() && d.blocks.back().right == x - 1) {
            d.blocks.back().right = x;
        } else {
            d.blocks.emplace_back(x, x);
        }
    }
    for (const Block& b : d.blocks) {
        const bool sea = c.boundary() == Spin::minus && (b.left == -n || b.right == n);
        d.touches_sea.push_back(sea);
    }
    for (int x = -n; x <= n + 1; ++x) {
        if (c.at(x - 1) != c.at(x)) d.boundary_bonds.push_back(x);
    }
    return d;
}

/// Inverse of decompose: the configuration whose minus set is the union of
/// the blocks.
inline Configuration rebuild(const Volume& v, const std::vector<Block>& blocks, Spin boundary) {
    auto c = Configuration::uniform(v, Spin::plus, boundary);
    for (const Block& b : blocks) {
        for (int x = b.left; x <= b.right; ++x) c.set(x, Spin::minus);
    }
    return c;
}

/// True when the block is a maximal minus run of c, reading sites outside
/// the window as the boundary sign.
inline bool is_maximal_block(const Configuration& c, const Block& b) {
    if (!b.inside(c.volume())) return false;
    for (int x = b.left; x <= b.right; ++x) {
        if (c.at(x) != Spin::minus) return false;
    }
    return c.at(b.left - 1) == Spin::plus && c.at(b.right + 1) == Spin::plus;
}

/// Sets every spin of a maximal minus block to +1.
inline Configuration chi_erase(const Configuration& c, const Block& b) {
    if (!is_maximal_block(c, b)) {
        throw PreconditionError("block " + b.to_string() + " is not a maximal minus run of " +
                                c.to_string());
    }
    Configuration out = c;
    for (int x = b.left; x <= b.right; ++x) out.set(x, Spin::plus);
    return out;
}

struct PeierlsVerdict {
    double lhs;        // exact block probability, plus boundary
    double rhs_bound;  // exp(-beta (I_left + I_{right+1}))
    bool holds;
};

inline constexpr double kPeierlsSlack = 1e-12;

inline PeierlsVerdict verify_peierls(const CouplingProfile& profile, const Volume& volume,
                                     const Beta& beta, const Block& block) {
    PeierlsVerdict v{};
    v.lhs = block_probability(profile, volume, beta, Spin::plus, block);
    v.rhs_bound = std::exp(-beta.value() * (profile(block.left) + profile(block.right + 1)));
    v.holds = v.lhs <= v.rhs_bound + kPeierlsSlack;
    return v;
}

/// All (2n+1)(2n+2)/2 intervals of the window, lexicographic by (left, right).
inline std::vector<Block> enumerate_blocks(const Volume& v) {
    std::vector<Block> out;
    out.reserve(static_cast<std::size_t>(v.sites()) * static_cast<std::size_t>(v.sites() + 1) / 2);
    for (int l = -v.n; l <= v.n; ++l) {
        for (int r = l; r <= v.n; ++r) out.emplace_back(l, r);
    }
    return out;
}

}  // namespace ichain

#endif  // ICHAIN_CONTOURS_HPP
