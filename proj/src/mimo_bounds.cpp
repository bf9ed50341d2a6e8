#include "relaynet/mimo_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaynet/capacity.hpp"
#include "relaynet/detail/enumeration.hpp"
#include "relaynet/errors.hpp"

namespace relaynet {

namespace {

int dim(std::size_t n) { return static_cast<int>(n); }

void check_range(int k, int lo, int hi, const char* what) {
    if (k < lo || k > hi) {
        throw DomainError(std::string(what) + " = " + std::to_string(k) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

void check_part(NodeSet part, NodeSet full, const char* what) {
    if (part == 0 || (part & full) == full || (part & ~full) != 0) {
        throw DomainError(std::string(what) + ": subset must be nonempty and proper");
    }
}

}  // namespace

Subchannel best_subchannel(const ChannelMatrix& h, int kt, int kr) {
    check_range(kt, 1, dim(h.n_tx()), "best_subchannel: kt");
    check_range(kr, 1, dim(h.n_rx()), "best_subchannel: kr");
    Subchannel best{0, 0, -1.0};
    const auto cols = detail::k_subsets(dim(h.n_tx()), kt);
    for (NodeSet rx : detail::k_subsets(dim(h.n_rx()), kr)) {
        for (NodeSet tx : cols) {
            const double c = mimo_capacity(h.submatrix(rx, tx));
            if (c > best.bits) best = {rx, tx, c};
        }
    }
    return best;
}

SelectionBoundReport selection_bound(const ChannelMatrix& h, int kt, int kr) {
    SelectionBoundReport r;
    r.best = best_subchannel(h, kt, kr);
    r.kt = kt;
    r.kr = kr;
    const int m = dim(h.n_tx());
    const int n = dim(h.n_rx());
    r.scale = Fraction(std::min(m, n), std::min(kt, kr));
    r.full_capacity = mimo_capacity(h);
    r.best_sub_capacity = r.best.bits;
    r.gap_constant_bits = r.scale.value() * (detail::log2_binomial(m, kt) + detail::log2_binomial(n, kr));
    r.bound_bits = r.scale.value() * r.best_sub_capacity + r.gap_constant_bits;
    r.holds = r.full_capacity <= r.bound_bits + kBoundTolerance;
    return r;
}

RowSelection greedy_decremental_selection(const ChannelMatrix& h, int k) {
    check_range(k, 1, dim(h.n_rx()), "greedy_decremental_selection: k");
    const NodeSet cols = h.all_tx();
    NodeSet rows = h.all_rx();
    for (int remaining = dim(h.n_rx()); remaining > k; --remaining) {
        NodeSet keep = 0;
        double keep_bits = -1.0;
        for (int drop : detail::members(rows)) {
            const NodeSet trial = rows & ~(NodeSet{1} << drop);
            const double c = mimo_capacity(h.submatrix(trial, cols));
            if (c > keep_bits) {
                keep = trial;
                keep_bits = c;
            }
        }
        rows = keep;
    }
    return {rows, mimo_capacity(h.submatrix(rows, cols))};
}

EigenRetention eigen_retention(const ChannelMatrix& h, int k) {
    const int m = dim(h.n_tx());
    const int n = dim(h.n_rx());
    const int n_min = std::min(m, n);
    check_range(k, 1, n_min, "eigen_retention: k");
    EigenRetention r;
    r.full_bits = mimo_capacity(h);
    r.best_rows_bits = best_subchannel(h, m, k).bits;
    for (int i = 1; i <= k; ++i) r.log2_gv += std::log2(static_cast<double>(m - i + 1) * (n - i + 1));
    r.bound_bits = static_cast<double>(k) / n_min * r.full_bits - r.log2_gv;
    r.holds = r.best_rows_bits >= r.bound_bits - kBoundTolerance;
    return r;
}

bool eigen_retention_check(const ChannelMatrix& h, int k) { return eigen_retention(h, k).holds; }

DecompositionReport decomposition_bound(const ChannelMatrix& h, Side side, NodeSet part) {
    const bool tx = side == Side::Transmit;
    const NodeSet full = tx ? h.all_tx() : h.all_rx();
    check_part(part, full, "decomposition_bound");
    const NodeSet rest = full & ~part;
    DecompositionReport r;
    r.c_full = mimo_capacity(h);
    r.c_part = mimo_capacity(tx ? h.submatrix(h.all_rx(), part) : h.submatrix(part, h.all_tx()));
    r.c_rest = mimo_capacity(tx ? h.submatrix(h.all_rx(), rest) : h.submatrix(rest, h.all_tx()));
    const double sum = r.c_part + r.c_rest;
    r.holds = r.c_full <= sum + kBoundTolerance;
    r.equal = std::abs(r.c_full - sum) <= kBoundTolerance;
    return r;
}

double g1(const ChannelMatrix& h, NodeSet tx_part) {
    const auto r = decomposition_bound(h, Side::Transmit, tx_part);
    return r.c_part + r.c_rest;
}

double g2(const ChannelMatrix& h, NodeSet rx_part) {
    const auto r = decomposition_bound(h, Side::Receive, rx_part);
    return r.c_part + r.c_rest;
}

ScaledSubchannelBound g3(const ChannelMatrix& h, int k) {
    const int m = dim(h.n_tx());
    const int n = dim(h.n_rx());
    check_range(k, 1, std::min(m, n), "g3: k");
    const double scale = static_cast<double>(std::min(m, n)) / k;
    ScaledSubchannelBound r;
    r.best = best_subchannel(h, k, k);
    r.bits = scale * r.best.bits;
    r.gap_bits = scale * (detail::log2_binomial(n, k) + detail::log2_binomial(m, k));
    return r;
}

}  // namespace relaynet
