#ifndef ICHAIN_MCMC_HPP
#define ICHAIN_MCMC_HPP

// Heat-bath (Glauber) single-spin-flip sampler for the finite-volume Gibbs
// measure. Sites are visited in fixed order -n..n each sweep. Mixing is
// exponentially slow at large beta when the couplings grow, so the sampler
// is only meaningful as a cross-check at moderate beta.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ichain/errors.hpp"
#include "ichain/exact.hpp"
#include "ichain/model.hpp"
#include "ichain/rng.hpp"

namespace ichain::mcmc {

struct ChainState {
    Configuration config;
    std::uint64_t rng_seed;
    Xoshiro256ss rng;
    long long sweep_count = 0;

    /// Chain started from the configuration aligned with the boundary.
    static ChainState start(const Volume& v, Spin boundary, std::uint64_t seed) {
        return ChainState{Configuration::uniform(v, boundary, boundary), seed, Xoshiro256ss(seed),
                          0};
    }

    friend bool operator==(const ChainState&, const ChainState&) = default;
};

struct EstimateRecord {
    double mean;
    double std_error;
    long long samples;
    long long burn_in;

    friend bool operator==(const EstimateRecord&, const EstimateRecord&) = default;
};

inline constexpr int kBatches = 20;

/// H(flipped at site) - H(c). Only the two bonds touching the site change.
inline double flip_energy_change(const Configuration& c, const CouplingProfile& profile, int site) {
    const Spin s = c.at(site);
    double dh = 0.0;
    for (int bond : {site, site + 1}) {
        const Spin other = c.at(bond == site ? site - 1 : site + 1);
        dh += other == s ? profile(bond) : -profile(bond);
    }
    return dh;
}

/// 1 / (1 + exp(beta dH)) without overflow.
inline double flip_probability(double beta, double dh) {
    const double x = beta * dh;
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

namespace detail {

inline void sweep(ChainState& st, const CouplingProfile& profile, double beta) {
    const int n = st.config.volume().n;
    for (int x = -n; x <= n; ++x) {
        const double p = flip_probability(beta, flip_energy_change(st.config, profile, x));
        if (st.rng.uniform() < p) st.config.set(x, -st.config.at(x));
    }
    ++st.sweep_count;
}

}  // namespace detail

inline ChainState glauber_sweep(ChainState state, const CouplingProfile& profile,
                                const Beta& beta) {
    detail::sweep(state, profile, beta.value());
    return state;
}

/// Time average of [s(site) = -1] over sweeps burn_in+1 .. sweeps, one sample
/// per sweep, with a 20-batch batch-means standard error.
inline EstimateRecord estimate_marginal(const CouplingProfile& profile, const Volume& volume,
                                        const Beta& beta, Spin boundary, int site,
                                        long long sweeps, long long burn_in, std::uint64_t seed) {
    if (burn_in < 0 || sweeps <= burn_in) {
        throw PreconditionError("estimate_marginal needs sweeps > burn_in >= 0");
    }
    const long long samples = sweeps - burn_in;
    if (samples < kBatches) {
        throw PreconditionError("estimate_marginal needs at least " + std::to_string(kBatches) +
                                " post-burn-in sweeps");
    }
    if (!volume.contains(site)) {
        throw DomainError("site " + std::to_string(site) + " outside volume");
    }

    auto st = ChainState::start(volume, boundary, seed);
    for (long long i = 0; i < burn_in; ++i) detail::sweep(st, profile, beta.value());

    const long long batch_len = samples / kBatches;
    std::vector<double> batch(kBatches, 0.0);
    double total = 0.0;
    for (long long i = 0; i < samples; ++i) {
        detail::sweep(st, profile, beta.value());
        const double ind = st.config.at(site) == Spin::minus ? 1.0 : 0.0;
        total += ind;
        const long long b = i / batch_len;
        if (b < kBatches) batch[static_cast<std::size_t>(b)] += ind;
    }

    double bmean = 0.0;
    for (auto& b : batch) {
        b /= static_cast<double>(batch_len);
        bmean += b;
    }
    bmean /= kBatches;
    double ss = 0.0;
    for (double b : batch) ss += (b - bmean) * (b - bmean);
    const double se = std::sqrt(ss / (kBatches - 1) / kBatches);
    return EstimateRecord{total / static_cast<double>(samples), se, samples, burn_in};
}

}  // namespace ichain::mcmc

#endif  // ICHAIN_MCMC_HPP
