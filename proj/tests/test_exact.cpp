#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ichain/contours.hpp"
#include "ichain/exact.hpp"
#include "ichain/oracle.hpp"
#include "test_support.hpp"

using namespace ichain;
using ichain::testing::rel_close;

namespace {

const auto kAbs = CouplingProfile::abs();

// Coupling table with I_{1-x} = I_x on bonds [-radius, radius+1]: the chain
// is mirror symmetric under site x -> -x.
CouplingProfile reflection_symmetric_table(int radius) {
    std::vector<double> v;
    for (int x = -radius; x <= radius + 1; ++x) {
        const int k = std::abs(2 * x - 1);
        v.push_back(0.5 * k + 0.125 * (k % 3));
    }
    return CouplingProfile::table(-radius, v);
}

// Partition sum of the n = 1 abs chain at beta = 1 with plus boundary, from
// the eight energies {0, 1, 1, 3, 2, 2, 4, 3} worked out by hand.
double n1_abs_partition() {
    return 1 + 2 * std::exp(-1.0) + 2 * std::exp(-2.0) + 2 * std::exp(-3.0) + std::exp(-4.0);
}

}  // namespace

TEST(LogPartition, FullyConstrainedGroundState) {
    SiteConstraint all_plus;
    for (int x = -4; x <= 4; ++x) all_plus.fix(x, Spin::plus);
    EXPECT_EQ(log_partition(kAbs, Volume(4), Beta(7.5), Spin::plus, all_plus).log(), 0.0);
}

TEST(LogPartition, ForcedConfigurationWeight) {
    SiteConstraint c;
    c.fix(-1, Spin::minus).fix(0, Spin::plus).fix(1, Spin::minus);
    // energy I_{-1} + I_0 + I_1 + I_2 = 4
    EXPECT_DOUBLE_EQ(log_partition(kAbs, Volume(1), Beta(2.0), Spin::plus, c).log(), -8.0);
    EXPECT_THROW(c.fix(0, Spin::minus), PreconditionError);
    SiteConstraint outside;
    outside.fix(5, Spin::plus);
    EXPECT_THROW(log_partition(kAbs, Volume(1), Beta(1), Spin::plus, outside), DomainError);
}

TEST(LogPartition, SmallChainMatchesHandSum) {
    const double z = log_partition(kAbs, Volume(1), Beta(1.0), Spin::plus).log();
    EXPECT_TRUE(rel_close(z, std::log(n1_abs_partition()), 1e-14));
    const auto o = oracle::enumerate_all(kAbs, Volume(1), Beta(1.0), Spin::plus);
    EXPECT_TRUE(rel_close(z, o.log_z.log(), 1e-12));
}

TEST(LogPartition, FreeSpinsGiveCountOfConfigurations) {
    for (int n : {0, 1, 5, 40}) {
        const double z =
            log_partition(CouplingProfile::constant(0), Volume(n), Beta(1), Spin::minus).log();
        EXPECT_TRUE(rel_close(z, (2 * n + 1) * std::log(2.0), 1e-13)) << n;
    }
}

TEST(LogPartition, TableMustCoverExteriorBonds) {
    const auto t = CouplingProfile::table(-2, {1, 1, 1, 1});  // bonds -2..1
    EXPECT_THROW(log_partition(t, Volume(2), Beta(1), Spin::plus), DomainError);
    EXPECT_NO_THROW(log_partition(t, Volume(0), Beta(1), Spin::plus));
}

TEST(SiteMarginal, Examples) {
    for (int site : {-3, 0, 2}) {
        EXPECT_DOUBLE_EQ(
            site_marginal(CouplingProfile::constant(0), Volume(3), Beta(4), Spin::plus, site,
                          Spin::minus),
            0.5);
    }
    const auto o = oracle::enumerate_all(kAbs, Volume(2), Beta(1), Spin::plus);
    EXPECT_TRUE(rel_close(site_marginal(kAbs, Volume(2), Beta(1), Spin::plus, 0, Spin::minus),
                          o.marginal(0, 2), 1e-12));
    EXPECT_THROW(site_marginal(kAbs, Volume(2), Beta(1), Spin::plus, 3, Spin::minus), DomainError);
}

TEST(SiteMarginal, OriginMinusDecreasesWithBeta) {
    for (int n = 1; n <= 8; ++n) {
        const double hot = site_marginal(kAbs, Volume(n), Beta(2), Spin::plus, 0, Spin::minus);
        const double cold = site_marginal(kAbs, Volume(n), Beta(5), Spin::plus, 0, Spin::minus);
        EXPECT_LT(cold, hot) << n;
        const auto o2 = oracle::enumerate_all(kAbs, Volume(n), Beta(2), Spin::plus);
        const auto o5 = oracle::enumerate_all(kAbs, Volume(n), Beta(5), Spin::plus);
        EXPECT_TRUE(rel_close(hot, o2.marginal(0, n), 1e-12));
        EXPECT_TRUE(rel_close(cold, o5.marginal(0, n), 1e-12));
    }
}

TEST(SiteMarginal, NormalizedAtEverySite) {
    for (const auto& [name, prof] : ichain::testing::test_profiles()) {
        for (double beta : {0.25, 1.0, 3.0}) {
            for (Spin b : {Spin::plus, Spin::minus}) {
                const Volume v(8);
                for (int x = -8; x <= 8; ++x) {
                    const double up = site_marginal(prof, v, Beta(beta), b, x, Spin::plus);
                    const double down = site_marginal(prof, v, Beta(beta), b, x, Spin::minus);
                    EXPECT_NEAR(up + down, 1.0, 1e-12) << name;
                    EXPECT_GE(down, 0.0);
                    EXPECT_LE(down, 1.0);
                }
            }
        }
    }
}

TEST(SiteMarginal, GlobalFlipSymmetryIsExact) {
    for (const auto& [name, prof] : ichain::testing::test_profiles()) {
        for (double beta : {0.25, 1.0, 3.0}) {
            const Volume v(8);
            for (int x = -8; x <= 8; ++x) {
                for (Spin s : {Spin::plus, Spin::minus}) {
                    EXPECT_EQ(site_marginal(prof, v, Beta(beta), Spin::plus, x, s),
                              site_marginal(prof, v, Beta(beta), Spin::minus, x, -s))
                        << name << " site " << x;
                }
            }
        }
    }
}

TEST(SiteMarginal, ReflectionSymmetricProfile) {
    const int n = 30;
    const auto prof = reflection_symmetric_table(n);
    for (double beta : {0.3, 1.0, 2.5}) {
        for (Spin b : {Spin::plus, Spin::minus}) {
            for (int x = 1; x <= n; ++x) {
                EXPECT_TRUE(rel_close(site_marginal(prof, Volume(n), Beta(beta), b, x, Spin::minus),
                                      site_marginal(prof, Volume(n), Beta(beta), b, -x, Spin::minus),
                                      1e-12))
                    << x;
            }
        }
    }
}

TEST(BlockProbability, SingleSiteMatchesOracleAndClosedForm) {
    const double p = block_probability(kAbs, Volume(1), Beta(1), Spin::plus, Block(0, 0));
    const auto o = oracle::enumerate_all(kAbs, Volume(1), Beta(1), Spin::plus);
    EXPECT_TRUE(rel_close(p, o.block_probability.at(Block(0, 0)), 1e-12));
    // only configuration (+,-,+): energy I_0 + I_1 = 1
    EXPECT_TRUE(rel_close(p, std::exp(-1.0) / n1_abs_partition(), 1e-14));
}

TEST(BlockProbability, MinusBoundaryEdgeBlockIsImpossible) {
    for (int n : {0, 1, 4}) {
        EXPECT_EQ(block_probability(kAbs, Volume(n), Beta(1), Spin::minus, Block(-n, n)), 0.0);
        EXPECT_EQ(block_probability(kAbs, Volume(n), Beta(1), Spin::minus, Block(-n, -n)), 0.0);
        EXPECT_GT(block_probability(kAbs, Volume(n), Beta(1), Spin::plus, Block(-n, n)), 0.0);
    }
}

TEST(BlockProbability, FreeSpinsAreFairCoins) {
    const auto free = CouplingProfile::constant(0);
    const Volume v(4);
    for (const Block& b : enumerate_blocks(v)) {
        const int k = (b.left > -4 ? 1 : 0) + (b.right < 4 ? 1 : 0);
        EXPECT_TRUE(ichain::testing::rel_close(block_probability(free, v, Beta(2.5), Spin::plus, b),
                                               std::ldexp(1.0, -(b.size() + k)), 1e-14))
            << b.to_string();
    }
}

TEST(BlockProbability, DomainErrors) {
    EXPECT_THROW(Block(1, 0), DomainError);
    EXPECT_THROW(block_probability(kAbs, Volume(2), Beta(1), Spin::plus, Block(0, 3)), DomainError);
}

TEST(MaxRun, SingleFairSpin) {
    const auto d = max_run_distribution(CouplingProfile::constant(0), Volume(0), Beta(1), Spin::plus);
    ASSERT_EQ(d.p.size(), 2U);
    EXPECT_DOUBLE_EQ(d.p[0], 0.5);
    EXPECT_DOUBLE_EQ(d.p[1], 0.5);
}

TEST(MaxRun, MatchesEnumerationAtNThree) {
    const auto d = max_run_distribution(kAbs, Volume(3), Beta(1), Spin::plus);
    const auto o = oracle::enumerate_all(kAbs, Volume(3), Beta(1), Spin::plus);
    ASSERT_EQ(d.p.size(), 8U);
    for (std::size_t L = 0; L < d.p.size(); ++L) {
        EXPECT_TRUE(rel_close(d.p[L], o.maxrun.p[L], 1e-12)) << L;
    }
}

TEST(MaxRun, NormalizedAndTailMonotone) {
    for (const auto& [name, prof] : ichain::testing::test_profiles()) {
        for (double beta : {0.25, 1.0, 3.0}) {
            for (Spin b : {Spin::plus, Spin::minus}) {
                const Volume v(8);
                const auto d = max_run_distribution(prof, v, Beta(beta), b);
                EXPECT_NEAR(d.total(), 1.0, 1e-10);
                double prev = 1.0;
                for (int L = -1; L <= v.sites(); ++L) {
                    const double t = maxrun_tail(prof, v, Beta(beta), b, L);
                    EXPECT_LE(t, prev + 1e-15) << name << " L=" << L;
                    EXPECT_NEAR(t, d.tail(L), 1e-12);
                    prev = t;
                }
                EXPECT_EQ(maxrun_tail(prof, v, Beta(beta), b, v.sites()), 0.0);
            }
        }
    }
}

TEST(MaxRun, TailAboveLogThresholdDecaysWithVolume) {
    const double c1 = 1.5;
    const Volume small(50), large(200);
    const double t50 = maxrun_tail(kAbs, small, Beta(2), Spin::plus, maxrun_threshold(small, c1));
    const double t200 = maxrun_tail(kAbs, large, Beta(2), Spin::plus, maxrun_threshold(large, c1));
    EXPECT_LT(t200, t50);
    EXPECT_EQ(maxrun_threshold(Volume(200), 1.5), 8);  // floor(1.5 ln 401) = floor(8.99)
}

TEST(MaxRun, ThresholdRounding) {
    EXPECT_EQ(maxrun_threshold(Volume(0), 3.0), 0);
    EXPECT_EQ(maxrun_threshold(Volume(3), 1.5), 2);    // 1.5 ln 7 = 2.92
    EXPECT_EQ(maxrun_threshold(Volume(25), 1.5), 5);   // 1.5 ln 51 = 5.90
    EXPECT_EQ(maxrun_threshold(Volume(100), 1.5), 7);  // 1.5 ln 201 = 7.96
}

TEST(Gap, FreeSpinsHaveNoGap) {
    for (int n : {0, 3, 100}) {
        EXPECT_EQ(magnetization_gap(CouplingProfile::constant(0), Volume(n), Beta(3)), 0.0);
    }
}

TEST(Gap, AgreesWithMarginalRoutes) {
    for (const auto& [name, prof] : ichain::testing::test_profiles()) {
        for (double beta : {0.25, 1.0, 3.0}) {
            for (int n : {0, 1, 4, 8}) {
                const Volume v(n);
                const double gap = magnetization_gap(prof, v, Beta(beta));
                const double plus = site_marginal(prof, v, Beta(beta), Spin::plus, 0, Spin::minus);
                const double minus = site_marginal(prof, v, Beta(beta), Spin::minus, 0, Spin::minus);
                EXPECT_NEAR(gap, 1.0 - 2.0 * plus, 1e-12) << name;
                EXPECT_NEAR(gap, minus - plus, 1e-12) << name;
                EXPECT_GE(gap, -1.0);
                EXPECT_LE(gap, 1.0);
                for (int x = -n; x <= n; ++x) {
                    const double m = site_magnetization(prof, v, Beta(beta), Spin::minus, x);
                    const double direct =
                        site_marginal(prof, v, Beta(beta), Spin::minus, x, Spin::plus) -
                        site_marginal(prof, v, Beta(beta), Spin::minus, x, Spin::minus);
                    EXPECT_NEAR(m, direct, 1e-12);
                }
            }
        }
    }
}

TEST(Gap, PersistsForGrowingCouplings) {
    EXPECT_GT(magnetization_gap(kAbs, Volume(100), Beta(3)), 0.9);
}

TEST(OriginTailBound, LiteralValueAndLimits) {
    const double q = std::exp(-1.0);
    EXPECT_DOUBLE_EQ(lemma3_bound(kAbs, Volume(10), Beta(2), 2.0),
                     q / (1 - q) + (1.0 / 21.0) / (1 - q));
    EXPECT_LT(lemma3_bound(kAbs, Volume(10), Beta(60), 2.0), 1e-25);
    EXPECT_LT(lemma3_bound(kAbs, Volume(10), Beta(60), 2.0),
              lemma3_bound(kAbs, Volume(10), Beta(30), 2.0));
    EXPECT_LE(site_marginal(kAbs, Volume(10), Beta(2), Spin::plus, 0, Spin::minus),
              lemma3_bound(kAbs, Volume(10), Beta(2), 2.0));
    EXPECT_THROW(lemma3_bound(kAbs, Volume(10), Beta(1.0), 2.0), DomainError);
    EXPECT_THROW(lemma3_bound(kAbs, Volume(10), Beta(0.5), 2.0), DomainError);
}

TEST(LongRunBound, LiteralValue) {
    const double q = std::exp(-1.0);
    // 21^{1.5 * (-1) + 1} / (1 - e^{-1})
    EXPECT_DOUBLE_EQ(long_run_bound(Volume(10), Beta(2), 1.5), std::pow(21.0, -0.5) / (1 - q));
    EXPECT_THROW(long_run_bound(Volume(10), Beta(1), 1.5), DomainError);
}

TEST(Engine, SmallVolumesAgreeWithEnumeration) {
    for (const auto& [name, prof] : ichain::testing::test_profiles()) {
        for (double beta : {0.25, 1.0, 3.0}) {
            for (Spin b : {Spin::plus, Spin::minus}) {
                for (int n = 0; n <= 5; ++n) {
                    const Volume v(n);
                    const auto o = oracle::enumerate_all(prof, v, Beta(beta), b);
                    EXPECT_TRUE(rel_close(log_partition(prof, v, Beta(beta), b).log(),
                                          o.log_z.log(), 1e-12))
                        << name << " n=" << n;
                    for (int x = -n; x <= n; ++x) {
                        EXPECT_TRUE(rel_close(
                            site_marginal(prof, v, Beta(beta), b, x, Spin::minus), o.marginal(x, n),
                            1e-12));
                    }
                    for (const auto& [blk, p] : o.block_probability) {
                        EXPECT_TRUE(
                            rel_close(block_probability(prof, v, Beta(beta), b, blk), p, 1e-12))
                            << name << " " << blk.to_string();
                    }
                }
            }
        }
    }
}

TEST(Engine, LargeVolumeAndColdChainStayFinite) {
    const Volume v(10000);
    const Beta cold(1e4);
    for (Spin b : {Spin::plus, Spin::minus}) {
        const auto z = log_partition(kAbs, v, cold, b);
        EXPECT_TRUE(std::isfinite(z.log()));
        SiteConstraint all_minus;
        for (int x = -v.n; x <= v.n; ++x) all_minus.fix(x, Spin::minus);
        const auto forced = log_partition(kAbs, v, cold, b, all_minus);
        EXPECT_TRUE(std::isfinite(forced.log()));
        const double m = site_marginal(kAbs, v, cold, b, 0, Spin::minus);
        EXPECT_TRUE(std::isfinite(m));
        EXPECT_TRUE(std::isfinite(site_magnetization(kAbs, v, cold, b, 0)));
        EXPECT_TRUE(std::isfinite(block_probability(kAbs, v, cold, b, Block(-3, 5))));
        EXPECT_TRUE(std::isfinite(maxrun_tail(kAbs, v, cold, b, maxrun_threshold(v, 1.5))));
    }
    // the all-minus weight under a plus boundary is exactly the two edge bonds
    SiteConstraint all_minus;
    for (int x = -v.n; x <= v.n; ++x) all_minus.fix(x, Spin::minus);
    EXPECT_EQ(log_partition(kAbs, v, cold, Spin::plus, all_minus).log(), -1e4 * (10000 + 10001));
}
