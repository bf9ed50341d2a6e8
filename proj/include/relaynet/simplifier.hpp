#pragma once

#include <cstdint>

#include "relaynet/capacity.hpp"
#include "relaynet/fraction.hpp"
#include "relaynet/mimo_bounds.hpp"
#include "relaynet/network.hpp"

namespace relaynet {

struct SimplificationResult {
    int k = 0;
    SubnetworkSelection best_selection;
    double best_sub_capacity_bits = 0.0;
    double full_capacity_bits = 0.0;
    /// best / full, or 0 when full is 0.
    double ratio = 0.0;
    /// Fraction the best subnetwork is guaranteed to retain: 1 for k = N,
    /// alpha(L, N) for k = 1, 1/2 for (L, N, k) = (2, 3, 2), 0 otherwise.
    Fraction guarantee_fraction;
    double gap_constant_bits = 0.0;
    /// best >= fraction * full - gap (within kBoundTolerance).
    bool inequality_holds = false;
};

/// Exhaustive search over all C(N, k)^L selections, each scored by
/// approx_capacity of the extracted subnetwork. Selections are scanned in
/// lexicographic order and the first maximum is kept. For k = 1 the result is
/// cross-checked against best_route.
/// Throws BudgetExceeded when L*N > max_cut_bits or when
/// C(N, k)^L * 2^(kL) > 2^max_cut_bits.
SimplificationResult best_subnetwork(const LayeredNetwork& net, int k, const EnumerationLimits& limits = {});

struct VerificationRecord {
    std::uint64_t seed = 0;
    int layers = 0;
    int relays = 0;
    SimplificationResult result;
    /// Surrogate capacity the sharpened form compares against.
    double c_tilde_bits = 0.0;
    /// best - (fraction * full - gap).
    double slack_gap_form = 0.0;
    /// best - fraction * c_tilde.
    double slack_sharp_form = 0.0;
    bool sharpened_holds = false;
    double runtime_seconds = 0.0;

    bool holds() const { return result.inequality_holds && sharpened_holds; }
};

/// Single-relay routing: C1* >= alpha * C-bar - 4 log2 N and C1* >= alpha * C~_1.
VerificationRecord verify_theorem1(const LayeredNetwork& net, const EnumerationLimits& limits = {});

/// Two of three relays, two layers: C2* >= C-bar/2 - 1.5 log2 3 and C2* >= C~_2 / 2.
VerificationRecord verify_theorem2(const LayeredNetwork& net, const EnumerationLimits& limits = {});

struct TightnessResult {
    double ratio = 0.0;
    bool within = false;  // ratio <= target + kBoundTolerance
};

TightnessResult tightness_check(const LayeredNetwork& net, int k, Fraction target,
                                const EnumerationLimits& limits = {});

struct SearchResult {
    LayeredNetwork network;
    double ratio = 0.0;
    std::uint64_t accepted_moves = 0;
};

/// Largest link capacity (bits) used by adversarial_search.
constexpr double kSearchMaxCapacity = 40.0;

/// Local search in link-capacity space for a network whose best k-subnetwork
/// keeps as small a fraction of C-bar as possible. Starts from a
/// uniform-capacity random network; each trial perturbs one link (fresh draw,
/// zero, log-scale step or the maximum) and keeps the move unless the ratio
/// rises. Networks with C-bar below 1 bit are never accepted.
/// Deterministic in `seed`; trials = 0 returns the starting network.
SearchResult adversarial_search(int layers, int relays, int k, std::uint64_t trials, std::uint64_t seed,
                                const EnumerationLimits& limits = {});

}  // namespace relaynet
