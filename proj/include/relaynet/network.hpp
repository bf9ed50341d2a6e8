#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace relaynet {

using ComplexGain = std::complex<double>;

/// Bitmask over the relays of one layer; bit i is relay i (0-based).
using NodeSet = std::uint32_t;

constexpr int kMaxNodesPerLayer = 30;

/// Complex gain matrix between two adjacent layers. Entry (rx, tx) is the
/// gain from transmitter `tx` to receiver `rx`; storage is row-major.
class ChannelMatrix {
public:
    ChannelMatrix() = default;
    ChannelMatrix(std::size_t n_rx, std::size_t n_tx);
    ChannelMatrix(std::size_t n_rx, std::size_t n_tx, std::vector<ComplexGain> entries);

    std::size_t n_rx() const { return n_rx_; }
    std::size_t n_tx() const { return n_tx_; }
    bool empty() const { return n_rx_ == 0 || n_tx_ == 0; }

    const ComplexGain& operator()(std::size_t rx, std::size_t tx) const {
        return entries_[rx * n_tx_ + tx];
    }
    void set(std::size_t rx, std::size_t tx, ComplexGain g);

    std::span<const ComplexGain> entries() const { return entries_; }

    /// Rows in `rx` and columns in `tx`, both kept in ascending order.
    /// Either set may be empty, giving an empty matrix.
    ChannelMatrix submatrix(NodeSet rx, NodeSet tx) const;
    ChannelMatrix submatrix(std::span<const int> rx, std::span<const int> tx) const;

    ChannelMatrix transposed() const;

    NodeSet all_rx() const { return full_set(n_rx_); }
    NodeSet all_tx() const { return full_set(n_tx_); }

    static NodeSet full_set(std::size_t n) {
        return n == 0 ? 0u : static_cast<NodeSet>((std::uint64_t{1} << n) - 1);
    }

    friend bool operator==(const ChannelMatrix&, const ChannelMatrix&) = default;

private:
    std::size_t n_rx_ = 0;
    std::size_t n_tx_ = 0;
    std::vector<ComplexGain> entries_;
};

/// Source, L layers of N relays, destination. Matrix 0 is N x 1 (S to layer
/// 1), matrices 1..L-1 are N x N and matrix L is 1 x N (layer L to D).
class LayeredNetwork {
public:
    LayeredNetwork(int layers, int relays, std::vector<ChannelMatrix> matrices);

    /// All-zero network of the given shape.
    static LayeredNetwork zeros(int layers, int relays);

    int layers() const { return layers_; }
    int relays() const { return relays_; }
    const ChannelMatrix& matrix(int l) const { return matrices_.at(static_cast<std::size_t>(l)); }
    const std::vector<ChannelMatrix>& matrices() const { return matrices_; }

    /// Gain of link (l, i, j): from node i of layer l to node j of layer l+1.
    /// S and D are index 0 of their layers.
    ComplexGain gain(int l, int from, int to) const { return matrix(l)(to, from); }

    friend bool operator==(const LayeredNetwork&, const LayeredNetwork&) = default;

private:
    int layers_;
    int relays_;
    std::vector<ChannelMatrix> matrices_;
};

/// Source-side relay sets y_1..y_L. S is always on the source side and D on
/// the sink side.
struct Cut {
    std::vector<NodeSet> source_side;

    int layers() const { return static_cast<int>(source_side.size()); }
    void validate(int layers, int relays) const;

    auto operator<=>(const Cut&) const = default;
};

/// K relays per layer, 0-based indices, ascending within each layer.
struct SubnetworkSelection {
    std::vector<std::vector<int>> per_layer;

    int layers() const { return static_cast<int>(per_layer.size()); }
    int k() const { return per_layer.empty() ? 0 : static_cast<int>(per_layer.front().size()); }
    void validate(int layers, int relays) const;

    auto operator<=>(const SubnetworkSelection&) const = default;
};

/// Real nonnegative gain whose link capacity is `r_bits`.
ComplexGain gain_from_capacity(double r_bits);

LayeredNetwork extract_subnetwork(const LayeredNetwork& net, const SubnetworkSelection& sel);

}  // namespace relaynet
