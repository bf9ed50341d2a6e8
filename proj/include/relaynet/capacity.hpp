#pragma once

#include <cstdint>

#include "relaynet/network.hpp"

namespace relaynet {

/// Guards for exhaustive cut enumeration.
struct EnumerationLimits {
    /// Largest L*N for which all 2^(L*N) cuts are enumerated.
    int max_cut_bits = 24;
    /// Worker threads used to split the cut space. Results do not depend on it.
    unsigned workers = 1;
};

/// Exact C-bar: minimum cut value and the lexicographically smallest
/// (y_1, ..., y_L) bitmask tuple that attains it.
struct CapacityResult {
    double c_bar_bits = 0.0;
    Cut argmin_cut;
    std::uint64_t cuts_evaluated = 0;
};

/// Best single-relay-per-layer path and its bottleneck capacity.
struct Route {
    SubnetworkSelection selection;
    double bits = 0.0;
};

/// log2(1 + |g|^2).
double link_capacity(ComplexGain g);

/// log2 det(I + H H^H); 0 for an empty matrix. Uses a square-root-free
/// Cholesky (LDL^H) factorization of the smaller Gram matrix.
double mimo_capacity(const ChannelMatrix& h);

/// Sum over l of the MIMO capacity from y_l to the complement of y_{l+1}.
double cut_value(const LayeredNetwork& net, const Cut& cut);

/// Minimum of cut_value over all 2^(L*N) cuts.
/// Throws BudgetExceeded when L*N > limits.max_cut_bits.
CapacityResult approx_capacity(const LayeredNetwork& net, const EnumerationLimits& limits = {});

/// Widest S-D path by layer-wise dynamic programming. Among optimal paths the
/// lexicographically smallest relay sequence is returned.
Route best_route(const LayeredNetwork& net);

}  // namespace relaynet
