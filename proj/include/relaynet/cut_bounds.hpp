#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "relaynet/capacity.hpp"
#include "relaynet/fraction.hpp"
#include "relaynet/network.hpp"

namespace relaynet {

/// sum_{l=0..L} min(|y_l|, |y_{l+1}^c|) with |y_0| = |y_{L+1}^c| = 1.
int t_of_cut(const Cut& cut, int relays);

/// Same quantity from per-layer source-side sizes s_1..s_L.
int t_of_profile(const std::vector<int>& sizes, int relays);

struct MaxTResult {
    int brute_max = 0;
    /// (L-1)N/2 + 2 for odd L, LN/2 + 2 for even L.
    int closed_form = 0;
    /// Value of the layer-alternating relaxation: same as closed_form for
    /// odd L, LN/2 + 1 for even L.
    int relaxation_bound = 0;
    std::vector<int> argmax_profile;  // first maximizer in lexicographic order
    std::uint64_t profiles_evaluated = 0;
};

/// Exhaustive maximum of T over all (N+1)^L size profiles.
/// Throws BudgetExceeded when (N+1)^L > max_profiles.
MaxTResult max_t(int layers, int relays, std::uint64_t max_profiles = std::uint64_t{1} << 26);

/// Guaranteed single-path fraction: 2/((L-1)N+4) for odd L, 2/(LN+2) for even L.
Fraction alpha(int layers, int relays);

/// min over cuts of sum_l min(|y_l|, |y_{l+1}^c|) * (largest link capacity
/// from y_l into y_{l+1}^c). Empty crossings contribute 0.
CapacityResult c_tilde_k1(const LayeredNetwork& net, const EnumerationLimits& limits = {});

/// Mirror image of a network: layer order reversed, every matrix transposed,
/// so S and D swap roles. Cut values satisfy
/// cut_value(net, Y) == cut_value(reflect(net), reflect(Y)).
LayeredNetwork reflect(const LayeredNetwork& net);

/// Reflected cut: y'_l = complement of y_{L+1-l}.
Cut reflect(const Cut& cut, int relays);

/// Cut class for the two-layer, three-relay network. Classes 1..7 have a
/// representative cut; a member cut is the representative after an optional
/// reflection and a per-layer relabeling. Class 8 is everything else.
struct CutClass {
    int id = 8;
    bool reflected = false;
    /// relabel[l][i]: relay of layer l+1 (of the reflected network when
    /// `reflected`) that plays the role of relay i in the representative.
    std::array<std::array<int, 3>, 2> relabel{{{0, 1, 2}, {0, 1, 2}}};
};

/// Representative source-side sets of classes 1..7 (0-based relays):
/// 1 ({},{}), 2 ({2},{}), 3 ({2},{0}), 4 ({2},{0,1}), 5 ({1,2},{}),
/// 6 ({1,2},{0}), 7 ({0,1,2},{}).
Cut class_representative(int class_id);

CutClass classify_cut_l2n3(const Cut& cut);

/// Gap constant attached to each class (index 1..8).
double class_gap_bits(int class_id);

struct FBoundResult {
    int class_id = 8;
    std::vector<double> f_values;
    /// Constant the individual member needs; never above g_y_bits.
    std::vector<double> member_gaps;
    std::vector<std::string> labels;
    double g_y_bits = 0.0;
    double min_f_bits = 0.0;
};

/// Evaluates every member of the class's bounding family (both p-indexed
/// families over all p). Class 8 returns the exact cut value with gap 0.
FBoundResult f_bound_l2n3(const LayeredNetwork& net, const Cut& cut);

/// min over all 64 cuts of the smallest family member (gap not added).
double c_tilde_k2(const LayeredNetwork& net);

/// Largest Table gap, 3 log2 3: C-bar <= c_tilde_k2 + this.
double c_tilde_k2_gap_bits();

/// (2 + 2N(L-1)) log2 N: C-bar <= c_tilde_k1 + this.
double c_tilde_k1_gap_bits(int layers, int relays);

}  // namespace relaynet
