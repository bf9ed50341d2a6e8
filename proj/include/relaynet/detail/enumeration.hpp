#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include "relaynet/network.hpp"

namespace relaynet::detail {

struct IndexedMin {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;

    // Smaller value wins; equal values resolve to the smaller index, which
    // makes the reduction associative and independent of the split.
    void merge(const IndexedMin& other) {
        if (other.value < value || (other.value == value && other.index < index)) *this = other;
    }
};

/// Minimum of f(i) over i in [0, count), split into contiguous blocks across
/// `workers` threads.
template <typename F>
IndexedMin parallel_min(std::uint64_t count, unsigned workers, const F& f) {
    const auto run = [&f](std::uint64_t lo, std::uint64_t hi) {
        IndexedMin best;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double v = f(i);
            if (v < best.value) best = {v, i};
        }
        return best;
    };
    workers = std::max(1u, workers);
    if (workers == 1 || count < 4096) return run(0, count);

    std::vector<IndexedMin> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::uint64_t block = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min(count, w * block);
            const std::uint64_t hi = std::min(count, lo + block);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    partial[w] = run(lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    IndexedMin best;
    for (const auto& p : partial) best.merge(p);
    return best;
}

/// Cut index layout: y_1 occupies the most significant N bits, so numeric
/// order on indices is lexicographic order on (y_1, ..., y_L).
inline NodeSet cut_layer(std::uint64_t index, int layer, int layers, int relays) {
    const int shift = relays * (layers - layer);
    return static_cast<NodeSet>((index >> shift) & ((std::uint64_t{1} << relays) - 1));
}

inline Cut decode_cut(std::uint64_t index, int layers, int relays) {
    Cut cut;
    for (int l = 1; l <= layers; ++l) cut.source_side.push_back(cut_layer(index, l, layers, relays));
    return cut;
}

/// Per-layer lookup of a quantity over all (transmitter set, receiver set)
/// pairs of one channel matrix.
class SubsetTable {
public:
    template <typename F>
    SubsetTable(const ChannelMatrix& h, const F& f) : rx_bits_(static_cast<int>(h.n_rx())) {
        const std::uint64_t n_tx_sets = std::uint64_t{1} << h.n_tx();
        const std::uint64_t n_rx_sets = std::uint64_t{1} << h.n_rx();
        values_.resize(n_tx_sets * n_rx_sets);
        for (std::uint64_t tx = 0; tx < n_tx_sets; ++tx)
            for (std::uint64_t rx = 0; rx < n_rx_sets; ++rx)
                values_[(tx << rx_bits_) | rx] = f(static_cast<NodeSet>(tx), static_cast<NodeSet>(rx));
    }

    double operator()(NodeSet tx, NodeSet rx) const {
        return values_[(static_cast<std::uint64_t>(tx) << rx_bits_) | rx];
    }

private:
    int rx_bits_;
    std::vector<double> values_;
};

/// Largest n_tx + n_rx for which a per-layer SubsetTable is built.
constexpr std::size_t kMaxTableBits = 16;

}  // namespace relaynet::detail

namespace relaynet::detail {

/// All k-element subsets of {0..n-1} as bitmasks, in lexicographic order of
/// their ascending index lists.
inline std::vector<NodeSet> k_subsets(int n, int k) {
    std::vector<NodeSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        NodeSet mask = 0;
        for (int i : idx) mask |= NodeSet{1} << i;
        out.push_back(mask);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

/// Ascending member indices of a bitmask.
inline std::vector<int> members(NodeSet s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

inline double log2_binomial(int n, int k) {
    double v = 0.0;
    for (int i = 1; i <= k; ++i) v += std::log2(static_cast<double>(n - k + i) / i);
    return v;
}

}  // namespace relaynet::detail
