#pragma once

#include "relaynet/fraction.hpp"
#include "relaynet/network.hpp"

namespace relaynet {

/// Absolute tolerance (bits) for every bound comparison.
constexpr double kBoundTolerance = 1e-9;

enum class Side { Transmit, Receive };

struct Subchannel {
    NodeSet rx = 0;
    NodeSet tx = 0;
    double bits = 0.0;
};

/// Exhaustive best kr x kt submatrix (kt columns, kr rows). Row sets are
/// scanned in lexicographic order, column sets inside; the first maximum wins.
Subchannel best_subchannel(const ChannelMatrix& h, int kt, int kr);

struct SelectionBoundReport {
    double full_capacity = 0.0;
    double best_sub_capacity = 0.0;
    int kt = 0;
    int kr = 0;
    Fraction scale;  // min(n_tx, n_rx) / min(kt, kr)
    double gap_constant_bits = 0.0;
    double bound_bits = 0.0;  // scale * best + gap
    Subchannel best;
    bool holds = false;
};

/// Full capacity against scale * (best kr x kt subchannel) + G with
/// G = scale * log2(C(n_tx, kt) * C(n_rx, kr)).
SelectionBoundReport selection_bound(const ChannelMatrix& h, int kt, int kr);

struct RowSelection {
    NodeSet rows = 0;
    double bits = 0.0;
};

/// Drops, one at a time, the receive row whose removal leaves the largest
/// capacity (lowest index on ties) until k rows remain.
RowSelection greedy_decremental_selection(const ChannelMatrix& h, int k);

struct EigenRetention {
    double full_bits = 0.0;
    double best_rows_bits = 0.0;  // best k rows, all columns
    double log2_gv = 0.0;
    double bound_bits = 0.0;  // (k / min dim) * full - log2(G_v)
    bool holds = false;
};

/// Best k-row subchannel against (k/n_min) * C - log2(G_v), where
/// G_v = prod_{i=1..k} (n_tx - i + 1)(n_rx - i + 1).
EigenRetention eigen_retention(const ChannelMatrix& h, int k);
bool eigen_retention_check(const ChannelMatrix& h, int k);

struct DecompositionReport {
    double c_full = 0.0;
    double c_part = 0.0;
    double c_rest = 0.0;
    bool holds = false;  // c_full <= c_part + c_rest
    bool equal = false;  // |c_full - (c_part + c_rest)| <= tolerance
};

/// Splits the transmit (columns) or receive (rows) side into `part` and its
/// complement. `part` must be nonempty and proper.
DecompositionReport decomposition_bound(const ChannelMatrix& h, Side side, NodeSet part);

/// Capacity of a column split: M(part) + M(complement).
double g1(const ChannelMatrix& h, NodeSet tx_part);
/// Capacity of a row split.
double g2(const ChannelMatrix& h, NodeSet rx_part);

struct ScaledSubchannelBound {
    double bits = 0.0;      // (n_min / k) * best k x k capacity
    double gap_bits = 0.0;  // (n_min / k) * log2(C(n_rx, k) * C(n_tx, k))
    Subchannel best;
};

ScaledSubchannelBound g3(const ChannelMatrix& h, int k);

}  // namespace relaynet
