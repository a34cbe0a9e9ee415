#ifndef ICHAIN_ORACLE_HPP
#define ICHAIN_ORACLE_HPP

// Brute-force ground truth: literal summation over all 2^(2n+1)
// configurations. Shares no code with the transfer recursions or with
// boundary_energy.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ichain/block.hpp"
#include "ichain/errors.hpp"
#include "ichain/exact.hpp"
#include "ichain/log_weight.hpp"
#include "ichain/model.hpp"

namespace ichain::oracle {

inline constexpr int kMaxRadius = 12;

struct EnumerationResult {
    LogWeight log_z;
    std::vector<double> minus_marginal;  // index x + n: mu(s(x) = -1)
    std::map<Block, double> block_probability;
    RunLengthDistribution maxrun;

    double marginal(int site, int n) const {
        return minus_marginal.at(static_cast<std::size_t>(site + n));
    }
};

/// Energy of the bit pattern (bit i set = site -n+i is minus). Walks every
/// bond x in [-n, n+1] and looks up both ends, reading the boundary sign
/// outside the window.
namespace detail {

// Neumaier summation.
class Sum {
public:
    Sum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        comp_ += std::fabs(sum_) >= std::fabs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
        return *this;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace detail

inline double enumerated_energy(const CouplingProfile& profile, int n, std::uint64_t bits,
                                Spin boundary) {
    const int sites = 2 * n + 1;
    const int exterior = boundary == Spin::minus ? 1 : 0;
    auto bit_at = [&](int i) { return (i < 0 || i >= sites) ? exterior : int((bits >> i) & 1U); };
    double h = 0.0;
    for (int i = 0; i <= sites; ++i) {
        if (bit_at(i - 1) != bit_at(i)) h += profile(i - n);
    }
    return h;
}

inline EnumerationResult enumerate_all(const CouplingProfile& profile, const Volume& volume,
                                       const Beta& beta, Spin boundary) {
    if (volume.n > kMaxRadius) {
        throw ResourceError("enumeration refused: n = " + std::to_string(volume.n) +
                            " exceeds cap " + std::to_string(kMaxRadius));
    }
    const int n = volume.n;
    const int sites = volume.sites();
    const std::uint64_t count = std::uint64_t{1} << sites;
    const int exterior = boundary == Spin::minus ? 1 : 0;

    std::vector<double> energy(count);
    double h_min = std::numeric_limits<double>::infinity();
    std::uint64_t argmin = 0;
    for (std::uint64_t c = 0; c < count; ++c) {
        energy[c] = enumerated_energy(profile, n, c, boundary);
        if (energy[c] < h_min) {
            h_min = energy[c];
            argmin = c;
        }
    }

    // Weights relative to the ground state, summed with compensation since
    // up to 2^25 terms of similar size land in one accumulator; the ground-state term is kept
    // out of `rest` so log Z = -beta h_min + log1p(rest) stays accurate when
    // Z is close to the ground-state weight.
    detail::Sum rest;
    std::vector<detail::Sum> minus_sum(static_cast<std::size_t>(sites));
    std::vector<detail::Sum> block_sum(static_cast<std::size_t>(sites * sites));
    std::vector<detail::Sum> run_sum(static_cast<std::size_t>(sites + 1));
    for (std::uint64_t c = 0; c < count; ++c) {
        const double w = std::exp(-beta.value() * (energy[c] - h_min));
        if (c != argmin) rest += w;

        int longest = 0;
        int start = -1;
        for (int i = 0; i <= sites; ++i) {
            const bool minus = i < sites && ((c >> i) & 1U);
            if (minus) {
                minus_sum[static_cast<std::size_t>(i)] += w;
                if (start < 0) start = i;
                continue;
            }
            if (start >= 0) {
                const int end = i - 1;
                longest = std::max(longest, end - start + 1);
                const bool left_ok = start > 0 || exterior == 0;
                const bool right_ok = end < sites - 1 || exterior == 0;
                if (left_ok && right_ok) {
                    block_sum[static_cast<std::size_t>(start * sites + end)] += w;
                }
                start = -1;
            }
        }
        run_sum[static_cast<std::size_t>(longest)] += w;
    }

    const double z_rel = 1.0 + rest.value();
    EnumerationResult r;
    r.log_z = LogWeight::from_log(-beta.value() * h_min + std::log1p(rest.value()));
    r.minus_marginal.resize(static_cast<std::size_t>(sites));
    for (int i = 0; i < sites; ++i) {
        r.minus_marginal[static_cast<std::size_t>(i)] = minus_sum[static_cast<std::size_t>(i)].value() / z_rel;
    }
    for (int s = 0; s < sites; ++s) {
        for (int e = s; e < sites; ++e) {
            r.block_probability.emplace(Block(s - n, e - n),
                                        block_sum[static_cast<std::size_t>(s * sites + e)].value() / z_rel);
        }
    }
    r.maxrun.p.resize(static_cast<std::size_t>(sites + 1));
    for (int L = 0; L <= sites; ++L) {
        r.maxrun.p[static_cast<std::size_t>(L)] = run_sum[static_cast<std::size_t>(L)].value() / z_rel;
    }
    return r;
}

}  // namespace ichain::oracle

#endif  // ICHAIN_ORACLE_HPP
