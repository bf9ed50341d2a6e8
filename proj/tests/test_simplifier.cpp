#include <cmath>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "relaynet/capacity.hpp"
#include "relaynet/cut_bounds.hpp"
#include "relaynet/errors.hpp"
#include "relaynet/generators.hpp"
#include "relaynet/simplifier.hpp"

using namespace relaynet;

TEST(BestSubnetwork, FullSelectionRatioOne) {
    const auto net = random_network(2, 3, Rayleigh{1.0}, 1);
    const auto r = best_subnetwork(net, 3);
    EXPECT_EQ(r.ratio, 1.0);
    EXPECT_EQ(r.guarantee_fraction, Fraction(1));
    EXPECT_EQ(r.best_selection, (SubnetworkSelection{{{0, 1, 2}, {0, 1, 2}}}));
    EXPECT_TRUE(r.inequality_holds);
}

TEST(BestSubnetwork, DiamondSingleRelay) {
    const LayeredNetwork net(1, 2,
                             {ChannelMatrix(2, 1, {gain_from_capacity(3.0), gain_from_capacity(2.0)}),
                              ChannelMatrix(1, 2, {gain_from_capacity(1.0), gain_from_capacity(2.0)})});
    const auto r = best_subnetwork(net, 1);
    EXPECT_EQ(r.best_sub_capacity_bits, 2.0);
    EXPECT_EQ(r.best_selection, (SubnetworkSelection{{{1}}}));
    EXPECT_EQ(r.guarantee_fraction, Fraction(1, 2));
}

TEST(BestSubnetwork, TwoOfThreeMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto net = random_network(2, 3, Rayleigh{1.0}, seed);
        const auto r = best_subnetwork(net, 2);
        EXPECT_NEAR(r.best_sub_capacity_bits, oracle::best_subnetwork(net, 2), 1e-9);
        EXPECT_EQ(r.guarantee_fraction, Fraction(1, 2));
        EXPECT_NEAR(r.gap_constant_bits, 1.5 * std::log2(3.0), 1e-15);
    }
}

TEST(BestSubnetwork, Invariants) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto net = random_network(2, 4, Rayleigh{1.0}, seed);
        double prev = 0.0;
        for (int k = 1; k <= 4; ++k) {
            const auto r = best_subnetwork(net, k);
            EXPECT_LE(r.best_sub_capacity_bits, r.full_capacity_bits + 1e-9);
            EXPECT_GE(r.best_sub_capacity_bits, prev - 1e-9);
            prev = r.best_sub_capacity_bits;
            if (k == 1) {
                const auto route = best_route(net);
                EXPECT_EQ(r.best_sub_capacity_bits, route.bits);
                EXPECT_EQ(r.best_selection, route.selection);
            }
        }
    }
}

TEST(BestSubnetwork, VacuousGuaranteeOutsideKnownCases) {
    const auto r = best_subnetwork(random_network(2, 4, Rayleigh{1.0}, 3), 2);
    EXPECT_EQ(r.guarantee_fraction, Fraction(0));
    EXPECT_TRUE(r.inequality_holds);
}

TEST(BestSubnetwork, ZeroNetworkRatioIsZero) {
    const auto r = best_subnetwork(LayeredNetwork::zeros(2, 3), 2);
    EXPECT_EQ(r.full_capacity_bits, 0.0);
    EXPECT_EQ(r.ratio, 0.0);
    EXPECT_TRUE(r.inequality_holds);
}

TEST(BestSubnetwork, BadArguments) {
    const auto net = random_network(2, 3, Rayleigh{1.0}, 1);
    EXPECT_THROW(best_subnetwork(net, 0), DomainError);
    EXPECT_THROW(best_subnetwork(net, 4), DomainError);
    EXPECT_THROW(best_subnetwork(random_network(5, 5, Rayleigh{1.0}, 1), 1), BudgetExceeded);
    EXPECT_THROW(best_subnetwork(net, 2, {6, 1}), BudgetExceeded);
}

TEST(RoutingGuarantee, ZeroNetwork) {
    const auto v = verify_theorem1(LayeredNetwork::zeros(3, 3));
    EXPECT_TRUE(v.result.inequality_holds);
    EXPECT_TRUE(v.sharpened_holds);
    EXPECT_TRUE(v.holds());
}

TEST(RoutingGuarantee, AdversarialOddIsTight) {
    const auto v = verify_theorem1(construct_adversarial_odd(3, 3, 10.0));
    EXPECT_TRUE(v.holds());
    EXPECT_LE(v.result.ratio, 0.2 + 1e-9);
}

TEST(RoutingGuarantee, RandomNetworks) {
    for (auto [L, N] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto v = verify_theorem1(random_network(L, N, Rayleigh{1.0}, seed));
            EXPECT_TRUE(v.result.inequality_holds) << L << "," << N << " seed " << seed;
            EXPECT_TRUE(v.sharpened_holds) << L << "," << N << " seed " << seed;
            EXPECT_EQ(v.result.guarantee_fraction, alpha(L, N));
        }
    }
}

TEST(TwoOfThreeGuarantee, ZeroAndRandom) {
    EXPECT_TRUE(verify_theorem2(LayeredNetwork::zeros(2, 3)).holds());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto v = verify_theorem2(random_network(2, 3, Rayleigh{1.0}, seed));
        EXPECT_TRUE(v.result.inequality_holds) << seed;
        EXPECT_TRUE(v.sharpened_holds) << seed;
    }
    EXPECT_THROW(verify_theorem2(LayeredNetwork::zeros(3, 3)), DomainError);
}

TEST(Tightness, AdversarialConstructions) {
    const auto odd = tightness_check(construct_adversarial_odd(3, 3, 50.0), 1, Fraction(2, 10));
    EXPECT_TRUE(odd.within) << odd.ratio;
    const auto even = tightness_check(construct_adversarial_even(2, 3, 50.0), 1, Fraction(2, 8));
    EXPECT_TRUE(even.within) << even.ratio;
    const auto full = tightness_check(random_network(2, 3, Rayleigh{1.0}, 2), 3, Fraction(1));
    EXPECT_TRUE(full.within);
    EXPECT_EQ(full.ratio, 1.0);
}

TEST(Tightness, ConstructionsHitAlphaOnOtherShapes) {
    for (auto [L, N] : {std::pair{1, 3}, std::pair{1, 2}, std::pair{3, 2}}) {
        const auto r = tightness_check(construct_adversarial_odd(L, N, 50.0), 1, alpha(L, N));
        EXPECT_TRUE(r.within) << L << "," << N << " ratio " << r.ratio;
    }
    for (auto [L, N] : {std::pair{2, 2}, std::pair{4, 2}, std::pair{2, 4}}) {
        const auto r = tightness_check(construct_adversarial_even(L, N, 50.0), 1, alpha(L, N));
        EXPECT_TRUE(r.within) << L << "," << N << " ratio " << r.ratio;
    }
}

TEST(AdversarialSearch, ZeroTrialsReturnsStart) {
    const auto a = adversarial_search(2, 3, 2, 0, 5);
    const auto b = adversarial_search(2, 3, 2, 0, 5);
    EXPECT_EQ(a.network, b.network);
    EXPECT_EQ(a.accepted_moves, 0u);
    EXPECT_EQ(a.ratio, best_subnetwork(a.network, 2).ratio);
}

TEST(AdversarialSearch, DeterministicAndMonotone) {
    const auto a = adversarial_search(2, 3, 2, 200, 9);
    const auto b = adversarial_search(2, 3, 2, 200, 9);
    EXPECT_EQ(a.network, b.network);
    EXPECT_EQ(a.ratio, b.ratio);
    EXPECT_LE(a.ratio, adversarial_search(2, 3, 2, 0, 9).ratio);
}

TEST(AdversarialSearch, DiamondApproachesHalf) {
    const auto r = adversarial_search(1, 2, 1, 1000, 3);
    const auto check = best_subnetwork(r.network, 1);
    EXPECT_EQ(check.ratio, r.ratio);
    EXPECT_LE(r.ratio, 0.55);
    EXPECT_GE(r.ratio, 0.5 - 4.0 / check.full_capacity_bits);
}
