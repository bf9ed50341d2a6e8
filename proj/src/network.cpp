#include "relaynet/network.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "relaynet/errors.hpp"

namespace relaynet {

namespace {

bool finite(ComplexGain g) { return std::isfinite(g.real()) && std::isfinite(g.imag()); }

std::vector<int> indices_of(NodeSet set) {
    std::vector<int> out;
    while (set != 0) {
        out.push_back(std::countr_zero(set));
        set &= set - 1;
    }
    return out;
}

}  // namespace

ChannelMatrix::ChannelMatrix(std::size_t n_rx, std::size_t n_tx)
    : n_rx_(n_rx), n_tx_(n_tx), entries_(n_rx * n_tx) {}

ChannelMatrix::ChannelMatrix(std::size_t n_rx, std::size_t n_tx, std::vector<ComplexGain> entries)
    : n_rx_(n_rx), n_tx_(n_tx), entries_(std::move(entries)) {
    if (entries_.size() != n_rx_ * n_tx_) {
        throw DomainError("channel matrix: expected " + std::to_string(n_rx_ * n_tx_) +
                          " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!finite(entries_[k])) {
            throw DomainError("channel matrix: non-finite entry at row " +
                              std::to_string(k / n_tx_) + ", column " + std::to_string(k % n_tx_));
        }
    }
}

void ChannelMatrix::set(std::size_t rx, std::size_t tx, ComplexGain g) {
    if (rx >= n_rx_ || tx >= n_tx_) throw DomainError("channel matrix: index out of range");
    if (!finite(g)) throw DomainError("channel matrix: non-finite gain");
    entries_[rx * n_tx_ + tx] = g;
}

ChannelMatrix ChannelMatrix::submatrix(NodeSet rx, NodeSet tx) const {
    const auto rows = indices_of(rx & all_rx());
    const auto cols = indices_of(tx & all_tx());
    return submatrix(rows, cols);
}

ChannelMatrix ChannelMatrix::submatrix(std::span<const int> rx, std::span<const int> tx) const {
    ChannelMatrix out(rx.size(), tx.size());
    for (std::size_t r = 0; r < rx.size(); ++r) {
        for (std::size_t c = 0; c < tx.size(); ++c) {
            const auto i = static_cast<std::size_t>(rx[r]);
            const auto j = static_cast<std::size_t>(tx[c]);
            if (i >= n_rx_ || j >= n_tx_) throw DomainError("submatrix: index out of range");
            out.entries_[r * tx.size() + c] = (*this)(i, j);
        }
    }
    return out;
}

ChannelMatrix ChannelMatrix::transposed() const {
    ChannelMatrix out(n_tx_, n_rx_);
    for (std::size_t r = 0; r < n_rx_; ++r)
        for (std::size_t c = 0; c < n_tx_; ++c) out.entries_[c * n_rx_ + r] = (*this)(r, c);
    return out;
}

LayeredNetwork::LayeredNetwork(int layers, int relays, std::vector<ChannelMatrix> matrices)
    : layers_(layers), relays_(relays), matrices_(std::move(matrices)) {
    if (layers_ < 1) throw DomainError("network: need at least one relay layer");
    if (relays_ < 1 || relays_ > kMaxNodesPerLayer) {
        throw DomainError("network: relays per layer must be in [1, " +
                          std::to_string(kMaxNodesPerLayer) + "]");
    }
    if (matrices_.size() != static_cast<std::size_t>(layers_) + 1) {
        throw DomainError("network: expected " + std::to_string(layers_ + 1) +
                          " channel matrices, got " + std::to_string(matrices_.size()));
    }
    const auto n = static_cast<std::size_t>(relays_);
    for (int l = 0; l <= layers_; ++l) {
        const auto& h = matrices_[static_cast<std::size_t>(l)];
        const std::size_t want_tx = l == 0 ? 1 : n;
        const std::size_t want_rx = l == layers_ ? 1 : n;
        if (h.n_rx() != want_rx || h.n_tx() != want_tx) {
            throw DomainError("network: layer " + std::to_string(l) + " matrix is " +
                              std::to_string(h.n_rx()) + "x" + std::to_string(h.n_tx()) +
                              ", expected " + std::to_string(want_rx) + "x" +
                              std::to_string(want_tx));
        }
    }
}

LayeredNetwork LayeredNetwork::zeros(int layers, int relays) {
    if (layers < 1 || relays < 1) throw DomainError("network: layers and relays must be >= 1");
    std::vector<ChannelMatrix> m;
    const auto n = static_cast<std::size_t>(relays);
    for (int l = 0; l <= layers; ++l) m.emplace_back(l == layers ? 1 : n, l == 0 ? 1 : n);
    return LayeredNetwork(layers, relays, std::move(m));
}

void Cut::validate(int layers, int relays) const {
    if (this->layers() != layers) {
        throw DomainError("cut has " + std::to_string(this->layers()) + " layers, network has " +
                          std::to_string(layers));
    }
    const NodeSet full = ChannelMatrix::full_set(static_cast<std::size_t>(relays));
    for (int l = 0; l < layers; ++l) {
        if ((source_side[static_cast<std::size_t>(l)] & ~full) != 0) {
            throw DomainError("cut layer " + std::to_string(l + 1) + " uses bits beyond N=" +
                              std::to_string(relays));
        }
    }
}

void SubnetworkSelection::validate(int layers, int relays) const {
    if (this->layers() != layers) {
        throw DomainError("selection has " + std::to_string(this->layers()) +
                          " layers, network has " + std::to_string(layers));
    }
    const int want = k();
    if (want < 1) throw DomainError("selection: K must be at least 1");
    for (int l = 0; l < layers; ++l) {
        const auto& s = per_layer[static_cast<std::size_t>(l)];
        if (static_cast<int>(s.size()) != want) {
            throw DomainError("selection layer " + std::to_string(l + 1) + " has " +
                              std::to_string(s.size()) + " relays, expected " +
                              std::to_string(want));
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= relays) {
                throw DomainError("selection layer " + std::to_string(l + 1) +
                                  ": relay index out of range");
            }
            if (i > 0 && s[i] <= s[i - 1]) {
                throw DomainError("selection layer " + std::to_string(l + 1) +
                                  ": indices must be distinct and ascending");
            }
        }
    }
}

ComplexGain gain_from_capacity(double r_bits) {
    if (!std::isfinite(r_bits) || r_bits < 0.0) {
        throw DomainError("gain_from_capacity: capacity must be finite and >= 0");
    }
    // |g|^2 = 2^r - 1, via expm1 so that small capacities keep full precision.
    const double power = std::expm1(r_bits * std::numbers::ln2);
    const double g = std::sqrt(power);
    if (!std::isfinite(g)) throw DomainError("gain_from_capacity: capacity too large");
    return {g, 0.0};
}

LayeredNetwork extract_subnetwork(const LayeredNetwork& net, const SubnetworkSelection& sel) {
    sel.validate(net.layers(), net.relays());
    const int L = net.layers();
    const std::vector<int> single{0};
    std::vector<ChannelMatrix> m;
    m.reserve(static_cast<std::size_t>(L) + 1);
    for (int l = 0; l <= L; ++l) {
        const auto& tx = l == 0 ? single : sel.per_layer[static_cast<std::size_t>(l - 1)];
        const auto& rx = l == L ? single : sel.per_layer[static_cast<std::size_t>(l)];
        m.push_back(net.matrix(l).submatrix(rx, tx));
    }
    return LayeredNetwork(L, sel.k(), std::move(m));
}

}  // namespace relaynet
