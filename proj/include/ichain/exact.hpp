#ifndef ICHAIN_EXACT_HPP
#define ICHAIN_EXACT_HPP

// Exact finite-volume Gibbs quantities by left-to-right transfer recursions
// carried in the log domain. Every routine is linear in the number of sites
// except the full longest-run distribution, which runs one recursion per
// run length.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ichain/block.hpp"
#include "ichain/errors.hpp"
#include "ichain/log_weight.hpp"
#include "ichain/model.hpp"

namespace ichain {

/// Sites whose spin is fixed; absent sites are summed over.
class SiteConstraint {
public:
    SiteConstraint() = default;

    SiteConstraint& fix(int site, Spin s) {
        auto [it, inserted] = fixed_.emplace(site, s);
        if (!inserted && it->second != s) {
            throw PreconditionError("site " + std::to_string(site) + " fixed to both signs");
        }
        return *this;
    }

    const std::map<int, Spin>& fixed() const noexcept { return fixed_; }
    bool empty() const noexcept { return fixed_.empty(); }

private:
    std::map<int, Spin> fixed_;
};

/// p[L] = probability that the longest run of minus sites inside the volume
/// has length exactly L, for L = 0 .. 2n+1.
struct RunLengthDistribution {
    std::vector<double> p;

    double total() const noexcept {
        double s = 0.0;
        for (double v : p) s += v;
        return s;
    }

    /// P(longest run > L).
    double tail(int L) const noexcept {
        double s = 0.0;
        for (std::size_t k = static_cast<std::size_t>(L < 0 ? 0 : L + 1); k < p.size(); ++k) {
            s += p[k];
        }
        return s;
    }
};

namespace detail {

/// beta * I_x for every bond x in [-n, n+1]; bonds -n and n+1 join the
/// window to the frozen exterior.
class BondCosts {
public:
    BondCosts(const CouplingProfile& profile, const Volume& v, const Beta& beta) : n_(v.n) {
        if (!profile.covers(-v.n, v.n + 1)) {
            throw DomainError("profile " + profile.to_string() + " does not cover bonds [" +
                              std::to_string(-v.n) + ", " + std::to_string(v.n + 1) + "]");
        }
        cost_.reserve(static_cast<std::size_t>(2 * v.n + 2));
        for (int x = -v.n; x <= v.n + 1; ++x) cost_.push_back(beta.value() * profile(x));
    }

    double operator()(int x) const noexcept { return cost_[static_cast<std::size_t>(x + n_)]; }
    /// Boltzmann factor of bond x when it disagrees.
    LogWeight flip(int x) const noexcept { return boltzmann((*this)(x)); }

private:
    int n_;
    std::vector<double> cost_;
};

/// Per-site allowed-spin mask built from a SiteConstraint.
inline std::vector<std::int8_t> constraint_mask(const Volume& v, const SiteConstraint& c) {
    std::vector<std::int8_t> mask(static_cast<std::size_t>(v.sites()), 0);
    for (const auto& [site, s] : c.fixed()) {
        if (!v.contains(site)) {
            throw DomainError("constraint on site " + std::to_string(site) + " outside volume");
        }
        mask[v.index(site)] = static_cast<std::int8_t>(value(s));
    }
    return mask;
}

inline std::size_t slot(Spin s) noexcept { return s == Spin::plus ? 0 : 1; }

inline LogWeight transfer_partition(const BondCosts& cost, const Volume& v, Spin boundary,
                                    const std::vector<std::int8_t>& mask) {
    constexpr std::array<Spin, 2> spins{Spin::plus, Spin::minus};
    auto allowed = [&](int x, Spin s) {
        const auto m = mask[v.index(x)];
        return m == 0 || m == value(s);
    };

    std::array<LogWeight, 2> f;
    for (Spin s : spins) {
        if (allowed(-v.n, s)) {
            f[slot(s)] = s == boundary ? LogWeight::one() : cost.flip(-v.n);
        }
    }
    for (int x = -v.n + 1; x <= v.n; ++x) {
        const LogWeight w = cost.flip(x);
        std::array<LogWeight, 2> g;
        for (Spin s : spins) {
            if (allowed(x, s)) g[slot(s)] = f[slot(s)] + f[slot(-s)] * w;
        }
        f = g;
    }
    const LogWeight w = cost.flip(v.n + 1);
    const LogWeight end_plus = boundary == Spin::plus ? LogWeight::one() : w;
    const LogWeight end_minus = boundary == Spin::minus ? LogWeight::one() : w;
    return f[0] * end_plus + f[1] * end_minus;
}

inline void check_site(const Volume& v, int site) {
    if (!v.contains(site)) {
        throw DomainError("site " + std::to_string(site) + " outside volume [" +
                          std::to_string(-v.n) + ", " + std::to_string(v.n) + "]");
    }
}

}  // namespace detail

/// log of the constrained partition sum over configurations on the volume.
inline LogWeight log_partition(const CouplingProfile& profile, const Volume& volume,
                               const Beta& beta, Spin boundary,
                               const SiteConstraint& constraints = {}) {
    const detail::BondCosts cost(profile, volume, beta);
    return detail::transfer_partition(cost, volume, boundary,
                                      detail::constraint_mask(volume, constraints));
}

inline double site_marginal(const CouplingProfile& profile, const Volume& volume,
                            const Beta& beta, Spin boundary, int site, Spin spin) {
    detail::check_site(volume, site);
    const detail::BondCosts cost(profile, volume, beta);
    std::vector<std::int8_t> mask(static_cast<std::size_t>(volume.sites()), 0);
    const LogWeight z = detail::transfer_partition(cost, volume, boundary, mask);
    mask[volume.index(site)] = static_cast<std::int8_t>(value(spin));
    return ratio(detail::transfer_partition(cost, volume, boundary, mask), z);
}

/// Constraint set for "block is a maximal minus run": minus on the block,
/// plus on both neighbours. Returns false when an exterior neighbour already
/// carries the wrong sign.
inline bool block_event_constraint(const Volume& volume, Spin boundary, const Block& block,
                                   SiteConstraint& out) {
    for (int x = block.left; x <= block.right; ++x) out.fix(x, Spin::minus);
    for (int nb : {block.left - 1, block.right + 1}) {
        if (volume.contains(nb)) {
            out.fix(nb, Spin::plus);
        } else if (boundary != Spin::plus) {
            return false;
        }
    }
    return true;
}

/// Probability that the block is one of the maximal minus runs.
inline double block_probability(const CouplingProfile& profile, const Volume& volume,
                                const Beta& beta, Spin boundary, const Block& block) {
    if (!block.inside(volume)) {
        throw DomainError("block " + block.to_string() + " not inside volume");
    }
    SiteConstraint event;
    if (!block_event_constraint(volume, boundary, block, event)) return 0.0;
    const detail::BondCosts cost(profile, volume, beta);
    const LogWeight z = detail::transfer_partition(
        cost, volume, boundary, detail::constraint_mask(volume, SiteConstraint{}));
    const LogWeight zb =
        detail::transfer_partition(cost, volume, boundary, detail::constraint_mask(volume, event));
    return ratio(zb, z);
}

/// P(longest minus run > L). Absorbing "exceeded" states remember the current
/// spin so the sum never needs a subtraction.
inline double maxrun_tail(const CouplingProfile& profile, const Volume& volume, const Beta& beta,
                          Spin boundary, int L) {
    if (L < 0) return 1.0;
    if (L >= volume.sites()) return 0.0;
    const detail::BondCosts cost(profile, volume, beta);
    const std::size_t K = static_cast<std::size_t>(L) + 1;  // run lengths 0..L
    const std::size_t EP = K, EM = K + 1;                    // exceeded, current +/-
    std::vector<LogWeight> f(K + 2), g(K + 2);

    const int n = volume.n;
    const LogWeight edge = cost.flip(-n);
    f[0] = boundary == Spin::plus ? LogWeight::one() : edge;
    const LogWeight first_minus = boundary == Spin::minus ? LogWeight::one() : edge;
    if (L >= 1) {
        f[1] = first_minus;
    } else {
        f[EM] = first_minus;
    }

    for (int x = -n + 1; x <= n; ++x) {
        const LogWeight w = cost.flip(x);
        std::fill(g.begin(), g.end(), LogWeight::zero());
        // next spin plus
        LogWeight to_plus = f[0];
        for (std::size_t k = 1; k < K; ++k) to_plus += f[k] * w;
        g[0] = to_plus;
        g[EP] = f[EP] + f[EM] * w;
        // next spin minus
        if (K > 1) g[1] = f[0] * w;
        for (std::size_t k = 1; k + 1 < K; ++k) g[k + 1] = f[k];
        LogWeight over = f[EM] + f[EP] * w;
        if (K > 1) {
            over += f[K - 1];
        } else {
            over += f[0] * w;
        }
        g[EM] = over;
        std::swap(f, g);
    }

    const LogWeight w = cost.flip(n + 1);
    const LogWeight end_plus = boundary == Spin::plus ? LogWeight::one() : w;
    const LogWeight end_minus = boundary == Spin::minus ? LogWeight::one() : w;
    LogWeight inside = f[0] * end_plus;
    for (std::size_t k = 1; k < K; ++k) inside += f[k] * end_minus;
    const LogWeight exceeded = f[EP] * end_plus + f[EM] * end_minus;
    return ratio(exceeded, inside + exceeded);
}

namespace detail {

/// Weight of configurations whose longest minus run is exactly L.
inline LogWeight exact_run_weight(const BondCosts& cost, const Volume& volume, Spin boundary,
                                  int L) {
    // state (k, hit): k = current run length 0..L, hit = run of length L seen
    const std::size_t K = static_cast<std::size_t>(L) + 1;
    auto at = [K](std::size_t k, bool hit) { return k + (hit ? K : 0); };
    std::vector<LogWeight> f(2 * K), g(2 * K);

    const int n = volume.n;
    const LogWeight edge = cost.flip(-n);
    f[at(0, L == 0)] = boundary == Spin::plus ? LogWeight::one() : edge;
    if (L >= 1) f[at(1, L == 1)] = boundary == Spin::minus ? LogWeight::one() : edge;

    for (int x = -n + 1; x <= n; ++x) {
        const LogWeight w = cost.flip(x);
        std::fill(g.begin(), g.end(), LogWeight::zero());
        for (bool hit : {false, true}) {
            LogWeight to_plus = f[at(0, hit)];
            for (std::size_t k = 1; k < K; ++k) to_plus += f[at(k, hit)] * w;
            g[at(0, hit)] += to_plus;
            if (L >= 1) {
                g[at(1, hit || L == 1)] += f[at(0, hit)] * w;
                for (std::size_t k = 1; k + 1 < K; ++k) {
                    g[at(k + 1, hit || k + 1 == K - 1)] += f[at(k, hit)];
                }
            }
        }
        std::swap(f, g);
    }

    const LogWeight w = cost.flip(n + 1);
    const LogWeight end_plus = boundary == Spin::plus ? LogWeight::one() : w;
    const LogWeight end_minus = boundary == Spin::minus ? LogWeight::one() : w;
    LogWeight total = f[at(0, true)] * end_plus;
    for (std::size_t k = 1; k < K; ++k) total += f[at(k, true)] * end_minus;
    return total;
}

}  // namespace detail

/// Exact distribution of the longest minus run inside the volume. Runs are
/// cut at the window edges, so under a minus boundary a run touching an edge
/// counts only its sites inside the volume.
inline RunLengthDistribution max_run_distribution(const CouplingProfile& profile,
                                                  const Volume& volume, const Beta& beta,
                                                  Spin boundary) {
    const detail::BondCosts cost(profile, volume, beta);
    const LogWeight z = detail::transfer_partition(
        cost, volume, boundary, detail::constraint_mask(volume, SiteConstraint{}));
    RunLengthDistribution d;
    d.p.resize(static_cast<std::size_t>(volume.sites()) + 1);
    for (int L = 0; L <= volume.sites(); ++L) {
        d.p[static_cast<std::size_t>(L)] =
            ratio(detail::exact_run_weight(cost, volume, boundary, L), z);
    }
    return d;
}

/// mu(s(site) = +1) - mu(s(site) = -1).
///
/// Summing the two-state recursion in the symmetric/antisymmetric basis
/// decouples it: the antisymmetric part on each side of the site is
/// b * prod tanh(beta I_x / 2) over the bonds on that side, and the
/// magnetization is (t_left + t_right) / (1 + t_left t_right). No
/// subtraction of nearly equal probabilities is involved.
inline double site_magnetization(const CouplingProfile& profile, const Volume& volume,
                                 const Beta& beta, Spin boundary, int site) {
    detail::check_site(volume, site);
    const detail::BondCosts cost(profile, volume, beta);
    auto side = [&](int lo, int hi) {
        double log_mag = 0.0;
        int sign = value(boundary);
        for (int x = lo; x <= hi; ++x) {
            const double t = std::tanh(0.5 * cost(x));
            if (t == 0.0) return 0.0;
            if (t < 0.0) sign = -sign;
            log_mag += std::log(std::fabs(t));
        }
        return sign * std::exp(log_mag);
    };
    const double tl = side(-volume.n, site);
    const double tr = side(site + 1, volume.n + 1);
    return (tl + tr) / (1.0 + tl * tr);
}

/// mu^-(s(0) = -1) - mu^+(s(0) = -1). Equal to the plus-boundary
/// magnetization at the origin by global spin-flip symmetry.
inline double magnetization_gap(const CouplingProfile& profile, const Volume& volume,
                                const Beta& beta) {
    return site_magnetization(profile, volume, beta, Spin::plus, 0);
}

/// Integer run-length threshold floor(c1 * ln(2n + 1)).
inline int maxrun_threshold(const Volume& volume, double c1) {
    const double t = std::floor(c1 * std::log(static_cast<double>(volume.sites())));
    if (!(t < static_cast<double>(std::numeric_limits<int>::max()))) {
        return std::numeric_limits<int>::max();
    }
    return t < 0.0 ? -1 : static_cast<int>(t);
}

/// |V|^{c1 (1 - beta) + 1} / (1 - e^{1 - beta}), the union bound on a long run.
inline double long_run_bound(const Volume& volume, const Beta& beta, double c1) {
    if (beta.value() <= 1.0) throw DomainError("long-run bound needs beta > 1");
    const double size = static_cast<double>(volume.sites());
    return std::pow(size, c1 * (1.0 - beta.value()) + 1.0) / -std::expm1(1.0 - beta.value());
}

/// e^{1-beta}/(1-e^{1-beta}) + |V|^{c1 (1 - beta) + 1}/(1-e^{1-beta}), the
/// upper bound on mu^+(s(0) = -1). Evaluated literally for any c1.
inline double lemma3_bound(const CouplingProfile& /*profile*/, const Volume& volume,
                           const Beta& beta, double c1) {
    if (beta.value() <= 1.0) {
        throw DomainError("origin bound needs beta > 1 (geometric series diverges)");
    }
    const double q = std::exp(1.0 - beta.value());
    const double denom = -std::expm1(1.0 - beta.value());
    const double size = static_cast<double>(volume.sites());
    return q / denom + std::pow(size, c1 * (1.0 - beta.value()) + 1.0) / denom;
}

}  // namespace ichain

#endif  // ICHAIN_EXACT_HPP
