#include <algorithm>
#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "relaynet/capacity.hpp"
#include "relaynet/cut_bounds.hpp"
#include "relaynet/detail/enumeration.hpp"
#include "relaynet/errors.hpp"
#include "relaynet/generators.hpp"

using namespace relaynet;

namespace {

std::vector<Cut> all_cuts_l2n3() {
    std::vector<Cut> cuts;
    for (NodeSet a = 0; a < 8; ++a)
        for (NodeSet b = 0; b < 8; ++b) cuts.push_back(Cut{{a, b}});
    return cuts;
}

double r0(const LayeredNetwork& n, int i) { return link_capacity(n.gain(0, 0, i)); }
double r1(const LayeredNetwork& n, int i, int j) { return link_capacity(n.gain(1, i, j)); }
double r2(const LayeredNetwork& n, int i) { return link_capacity(n.gain(2, i, 0)); }

double value_of(const FBoundResult& f, const std::string& label) {
    const auto it = std::find(f.labels.begin(), f.labels.end(), label);
    EXPECT_NE(it, f.labels.end()) << label;
    return it == f.labels.end() ? NAN : f.f_values[static_cast<std::size_t>(it - f.labels.begin())];
}

}  // namespace

TEST(TOfCut, Examples) {
    EXPECT_EQ(t_of_cut(Cut{{0, 0}}, 3), 1);
    EXPECT_EQ(t_of_cut(Cut{{7, 7}}, 3), 1);
    EXPECT_EQ(t_of_cut(Cut{{0b100, 0b001}}, 3), 3);
    EXPECT_EQ(t_of_profile({1, 1}, 3), 3);
}

TEST(MaxT, Examples) {
    const auto one = max_t(1, 4);
    EXPECT_EQ(one.closed_form, 2);
    EXPECT_LE(one.brute_max, 2);
    const auto even = max_t(2, 3);
    EXPECT_EQ(even.closed_form, 5);
    EXPECT_EQ(even.relaxation_bound, 4);
    EXPECT_LE(even.brute_max, 5);
    EXPECT_EQ(even.profiles_evaluated, 16u);
    const auto odd = max_t(5, 5);
    EXPECT_EQ(odd.closed_form, 12);
    EXPECT_LE(odd.brute_max, 12);
    EXPECT_EQ(t_of_profile(odd.argmax_profile, 5), odd.brute_max);
}

TEST(MaxT, ProfilesAgreeWithCuts) {
    // T depends only on layer sizes: the maximum over all cuts equals the
    // maximum over size profiles.
    for (int L = 1; L <= 3; ++L) {
        for (int N = 1; N <= 3; ++N) {
            int best = 0;
            for (std::uint64_t i = 0; i < (std::uint64_t{1} << (L * N)); ++i)
                best = std::max(best, t_of_cut(detail::decode_cut(i, L, N), N));
            EXPECT_EQ(best, max_t(L, N).brute_max) << L << "," << N;
        }
    }
}

TEST(MaxT, BelowBothBoundsOnSweep) {
    for (int L = 1; L <= 6; ++L) {
        for (int N = 1; N <= 5; ++N) {
            const auto r = max_t(L, N);
            EXPECT_LE(r.brute_max, r.closed_form) << L << "," << N;
            EXPECT_LE(r.brute_max, r.relaxation_bound) << L << "," << N;
        }
    }
}

TEST(MaxT, Budget) { EXPECT_THROW(max_t(30, 30), BudgetExceeded); }

TEST(Alpha, Values) {
    EXPECT_EQ(alpha(1, 7), Fraction(1, 2));
    EXPECT_EQ(alpha(5, 5), Fraction(1, 12));
    EXPECT_EQ(alpha(2, 3), Fraction(1, 4));
    EXPECT_EQ(alpha(3, 3), Fraction(1, 5));
    EXPECT_EQ(alpha(2, 2), Fraction(1, 3));
}

TEST(CTildeK1, LineAndZero) {
    const LayeredNetwork line(2, 1,
                              {ChannelMatrix(1, 1, {gain_from_capacity(4.0)}), ChannelMatrix(1, 1, {gain_from_capacity(1.5)}),
                               ChannelMatrix(1, 1, {gain_from_capacity(7.0)})});
    EXPECT_EQ(c_tilde_k1(line).c_bar_bits, 1.5);
    EXPECT_EQ(c_tilde_k1(LayeredNetwork::zeros(3, 3)).c_bar_bits, 0.0);
}

TEST(CTildeK1, RelationToCBar) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto net = random_network(2, 3, Rayleigh{1.0}, seed);
        EXPECT_LE(approx_capacity(net).c_bar_bits,
                  c_tilde_k1(net).c_bar_bits + c_tilde_k1_gap_bits(2, 3) + 1e-9);
    }
}

TEST(Reflection, PreservesCutValues) {
    const auto net = random_network(3, 2, Rayleigh{1.0}, 17);
    const auto ref = reflect(net);
    EXPECT_EQ(reflect(ref), net);
    for (std::uint64_t i = 0; i < 64; ++i) {
        const Cut cut = detail::decode_cut(i, 3, 2);
        EXPECT_NEAR(cut_value(net, cut), cut_value(ref, reflect(cut, 2)), 1e-9);
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify_cut_l2n3(Cut{{0, 0}}).id, 1);
    EXPECT_EQ(classify_cut_l2n3(Cut{{0b100, 0b001}}).id, 3);
    const auto full = classify_cut_l2n3(Cut{{7, 7}});
    EXPECT_EQ(full.id, 1);
    EXPECT_TRUE(full.reflected);
    EXPECT_EQ(classify_cut_l2n3(Cut{{0, 7}}).id, 8);
    EXPECT_THROW(classify_cut_l2n3(Cut{{0, 0, 0}}), DomainError);
}

TEST(Classify, TotalAndClosedUnderReflection) {
    std::map<int, int> sizes;
    for (const auto& cut : all_cuts_l2n3()) {
        const auto c = classify_cut_l2n3(cut);
        ASSERT_GE(c.id, 1);
        ASSERT_LE(c.id, 8);
        ++sizes[c.id];
        EXPECT_EQ(classify_cut_l2n3(reflect(cut, 3)).id, c.id);
    }
    const std::map<int, int> want{{1, 2}, {2, 6}, {3, 18}, {4, 9}, {5, 6}, {6, 9}, {7, 1}, {8, 13}};
    EXPECT_EQ(sizes, want);
}

TEST(Classify, RepresentativesMapToThemselves) {
    for (int id = 1; id <= 7; ++id) {
        const auto c = classify_cut_l2n3(class_representative(id));
        EXPECT_EQ(c.id, id);
        EXPECT_FALSE(c.reflected);
        for (const auto& layer : c.relabel) EXPECT_EQ(layer, (std::array<int, 3>{0, 1, 2}));
    }
}

TEST(FBound, ClassOneExample) {
    auto net = LayeredNetwork::zeros(2, 3);
    std::vector<ChannelMatrix> m = net.matrices();
    m[0] = ChannelMatrix(3, 1, {gain_from_capacity(1.0), gain_from_capacity(2.0), gain_from_capacity(3.0)});
    net = LayeredNetwork(2, 3, m);
    const auto f = f_bound_l2n3(net, Cut{{0, 0}});
    EXPECT_EQ(f.class_id, 1);
    EXPECT_NEAR(f.min_f_bits, 3.0, 1e-12);
    EXPECT_NEAR(f.g_y_bits, std::log2(3.0), 1e-15);
    const double cut = cut_value(net, Cut{{0, 0}});
    EXPECT_NEAR(cut, std::log2(1.0 + 1.0 + 3.0 + 7.0), 1e-12);
    EXPECT_LE(cut, f.min_f_bits + f.g_y_bits);
}

TEST(FBound, ClassEightIsExactCut) {
    const auto net = random_network(2, 3, Rayleigh{1.0}, 21);
    const Cut cut{{0b001, 0b111}};
    const auto f = f_bound_l2n3(net, cut);
    EXPECT_EQ(f.class_id, 8);
    EXPECT_EQ(f.min_f_bits, cut_value(net, cut));
    EXPECT_EQ(f.g_y_bits, 0.0);
}

TEST(FBound, ClassFourByHand) {
    const auto net = random_network(2, 3, UniformCapacity{0.0, 20.0}, 22);
    // Representative ({3},{1,2}) in one-based terms.
    const auto rep = f_bound_l2n3(net, Cut{{0b100, 0b011}});
    EXPECT_EQ(rep.class_id, 4);
    EXPECT_NEAR(rep.min_f_bits, std::max(r0(net, 0), r0(net, 1)) + r1(net, 2, 2) + std::max(r2(net, 0), r2(net, 1)), 1e-12);
    EXPECT_EQ(rep.g_y_bits, 2.0);
    // Relabeled member ({1},{2,3}).
    const auto moved = f_bound_l2n3(net, Cut{{0b001, 0b110}});
    EXPECT_EQ(moved.class_id, 4);
    EXPECT_NEAR(moved.min_f_bits, std::max(r0(net, 1), r0(net, 2)) + r1(net, 0, 0) + std::max(r2(net, 1), r2(net, 2)), 1e-12);
}

TEST(FBound, ReflectedClassTwoByHand) {
    const auto net = random_network(2, 3, UniformCapacity{0.0, 20.0}, 23);
    // ({1,2,3},{1,2}): reflected representative of class 2.
    const auto f = f_bound_l2n3(net, Cut{{0b111, 0b011}});
    EXPECT_EQ(f.class_id, 2);
    const double want = std::max(r2(net, 0), r2(net, 1)) + std::max({r1(net, 0, 2), r1(net, 1, 2), r1(net, 2, 2)});
    EXPECT_NEAR(f.min_f_bits, want, 1e-12);
}

TEST(FBound, ClassFiveMembersByHand) {
    const auto net = random_network(2, 3, Rayleigh{2.0}, 24);
    const auto f = f_bound_l2n3(net, Cut{{0b110, 0}});
    EXPECT_EQ(f.class_id, 5);
    ASSERT_EQ(f.f_values.size(), 5u);
    const auto& h1 = net.matrix(1);
    const double f52 = r0(net, 0) + std::max({r1(net, 1, 0), r1(net, 1, 1), r1(net, 1, 2)}) +
                       std::max({r1(net, 2, 0), r1(net, 2, 1), r1(net, 2, 2)});
    EXPECT_NEAR(value_of(f, "f5.2"), f52, 1e-12);
    const double f53p0 = r0(net, 0) + std::max(r1(net, 1, 0), r1(net, 2, 0)) +
                         oracle::svd_capacity(h1.submatrix(0b110, 0b110));
    EXPECT_NEAR(value_of(f, "f5.3[p=0]"), f53p0, 1e-9);
    double best_pair = 0.0;
    for (NodeSet v : {0b011u, 0b101u, 0b110u}) best_pair = std::max(best_pair, oracle::svd_capacity(h1.submatrix(v, 0b110)));
    EXPECT_NEAR(value_of(f, "f5.1"), r0(net, 0) + best_pair, 1e-9);
}

TEST(FBound, ClassSevenMembers) {
    const auto net = random_network(2, 3, Rayleigh{1.0}, 25);
    const auto f = f_bound_l2n3(net, Cut{{7, 0}});
    EXPECT_EQ(f.class_id, 7);
    ASSERT_EQ(f.f_values.size(), 4u);
    EXPECT_NEAR(f.g_y_bits, 3.0 * std::log2(3.0), 1e-12);
    double best = 0.0;
    for (NodeSet u : {3u, 5u, 6u})
        for (NodeSet v : {3u, 5u, 6u}) best = std::max(best, oracle::svd_capacity(net.matrix(1).submatrix(v, u)));
    EXPECT_NEAR(value_of(f, "f7.1"), 1.5 * best, 1e-9);
}

TEST(FBound, BoundsEveryCutOnRandomNetworks) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto net = random_network(2, 3, Rayleigh{seed % 2 ? 1.0 : 30.0}, seed);
        for (const auto& cut : all_cuts_l2n3()) {
            const double value = cut_value(net, cut);
            const auto f = f_bound_l2n3(net, cut);
            EXPECT_EQ(f.min_f_bits, *std::min_element(f.f_values.begin(), f.f_values.end()));
            for (std::size_t i = 0; i < f.f_values.size(); ++i) {
                EXPECT_LE(f.member_gaps[i], f.g_y_bits);
                EXPECT_LE(value, f.f_values[i] + f.member_gaps[i] + 1e-9) << f.labels[i] << " seed " << seed;
            }
        }
    }
}

TEST(CTildeK2, ZeroAndRelation) {
    EXPECT_EQ(c_tilde_k2(LayeredNetwork::zeros(2, 3)), 0.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto net = random_network(2, 3, Rayleigh{1.0}, seed);
        EXPECT_LE(approx_capacity(net).c_bar_bits, c_tilde_k2(net) + c_tilde_k2_gap_bits() + 1e-9);
    }
    EXPECT_THROW(c_tilde_k2(LayeredNetwork::zeros(2, 2)), DomainError);
}

TEST(ClassGaps, TableValues) {
    EXPECT_NEAR(class_gap_bits(1), std::log2(3.0), 1e-15);
    EXPECT_NEAR(class_gap_bits(2), std::log2(6.0), 1e-15);
    EXPECT_EQ(class_gap_bits(3), 2.0);
    EXPECT_NEAR(class_gap_bits(5), 2.0 * std::log2(3.0), 1e-15);
    EXPECT_NEAR(class_gap_bits(7), 3.0 * std::log2(3.0), 1e-15);
    EXPECT_EQ(class_gap_bits(8), 0.0);
    double worst = 0.0;
    for (int id = 1; id <= 8; ++id) worst = std::max(worst, class_gap_bits(id));
    EXPECT_EQ(worst, c_tilde_k2_gap_bits());
}
