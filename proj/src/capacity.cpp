#include "relaynet/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "relaynet/detail/enumeration.hpp"
#include "relaynet/errors.hpp"

namespace relaynet {

namespace {

double bits_from_excess(double x) { return std::log1p(x) / std::numbers::ln2; }

// Hermitian Gram matrix G = H H^H (or H^H H when that is smaller), packed
// row-major, dimension m.
std::vector<ComplexGain> gram(const ChannelMatrix& h, std::size_t& m) {
    const std::size_t rows = h.n_rx();
    const std::size_t cols = h.n_tx();
    const bool by_rows = rows <= cols;
    m = by_rows ? rows : cols;
    const std::size_t inner = by_rows ? cols : rows;
    std::vector<ComplexGain> g(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        double diag = 0.0;
        for (std::size_t k = 0; k < inner; ++k) diag += std::norm(by_rows ? h(i, k) : h(k, i));
        g[i * m + i] = diag;
        for (std::size_t j = 0; j < i; ++j) {
            ComplexGain s = 0.0;
            for (std::size_t k = 0; k < inner; ++k) {
                s += by_rows ? h(i, k) * std::conj(h(j, k)) : std::conj(h(k, i)) * h(k, j);
            }
            g[i * m + j] = s;
            g[j * m + i] = std::conj(s);
        }
    }
    return g;
}

}  // namespace

double link_capacity(ComplexGain g) { return bits_from_excess(std::norm(g)); }

double mimo_capacity(const ChannelMatrix& h) {
    if (h.empty()) return 0.0;
    std::size_t m = 0;
    const auto g = gram(h, m);

    // LDL^H of A = I + G. Each pivot d_j is a Schur complement of a matrix
    // >= I and is therefore >= 1; we carry e_j = d_j - 1 and clamp it at 0 so
    // roundoff on ill-conditioned inputs cannot produce NaN.
    std::vector<ComplexGain> lower(m * m);
    std::vector<double> d(m);
    double bits = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double excess = g[j * m + j].real();
        for (std::size_t k = 0; k < j; ++k) excess -= std::norm(lower[j * m + k]) * d[k];
        excess = std::max(excess, 0.0);
        d[j] = 1.0 + excess;
        bits += bits_from_excess(excess);
        for (std::size_t i = j + 1; i < m; ++i) {
            ComplexGain s = g[i * m + j];
            for (std::size_t k = 0; k < j; ++k) s -= lower[i * m + k] * std::conj(lower[j * m + k]) * d[k];
            lower[i * m + j] = s / d[j];
        }
    }
    return bits;
}

double cut_value(const LayeredNetwork& net, const Cut& cut) {
    cut.validate(net.layers(), net.relays());
    const int L = net.layers();
    const NodeSet full = ChannelMatrix::full_set(static_cast<std::size_t>(net.relays()));
    double value = 0.0;
    for (int l = 0; l <= L; ++l) {
        const NodeSet tx = l == 0 ? NodeSet{1} : cut.source_side[static_cast<std::size_t>(l - 1)];
        const NodeSet rx = l == L ? NodeSet{1} : full & ~cut.source_side[static_cast<std::size_t>(l)];
        value += mimo_capacity(net.matrix(l).submatrix(rx, tx));
    }
    return value;
}

CapacityResult approx_capacity(const LayeredNetwork& net, const EnumerationLimits& limits) {
    const int L = net.layers();
    const int N = net.relays();
    const int bits = L * N;
    if (bits > limits.max_cut_bits || bits > 62) {
        throw BudgetExceeded("approx_capacity: L*N = " + std::to_string(bits) +
                             " exceeds the enumeration budget of " +
                             std::to_string(limits.max_cut_bits));
    }
    const NodeSet full = ChannelMatrix::full_set(static_cast<std::size_t>(N));

    std::vector<std::optional<detail::SubsetTable>> tables;
    for (int l = 0; l <= L; ++l) {
        const auto& h = net.matrix(l);
        if (h.n_rx() + h.n_tx() <= detail::kMaxTableBits) {
            tables.emplace_back(std::in_place, h, [&h](NodeSet tx, NodeSet rx) {
                return mimo_capacity(h.submatrix(rx, tx));
            });
        } else {
            tables.emplace_back(std::nullopt);
        }
    }
    const auto term = [&](int l, NodeSet tx, NodeSet rx) {
        const auto& t = tables[static_cast<std::size_t>(l)];
        return t ? (*t)(tx, rx) : mimo_capacity(net.matrix(l).submatrix(rx, tx));
    };

    const std::uint64_t count = std::uint64_t{1} << bits;
    const auto best = detail::parallel_min(count, limits.workers, [&](std::uint64_t index) {
        double value = 0.0;
        NodeSet prev = 1;  // S
        for (int l = 0; l < L; ++l) {
            const NodeSet y = detail::cut_layer(index, l + 1, L, N);
            value += term(l, prev, full & ~y);
            prev = y;
        }
        value += term(L, prev, 1);
        return value;
    });
    return {best.value, detail::decode_cut(best.index, L, N), count};
}

Route best_route(const LayeredNetwork& net) {
    const int L = net.layers();
    const int N = net.relays();
    // widest[l][i]: best bottleneck from relay i of layer l (1-based l) to D.
    std::vector<std::vector<double>> widest(static_cast<std::size_t>(L) + 1,
                                            std::vector<double>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i) widest[L][i] = link_capacity(net.gain(L, i, 0));
    for (int l = L - 1; l >= 1; --l) {
        for (int i = 0; i < N; ++i) {
            double w = 0.0;
            for (int j = 0; j < N; ++j) w = std::max(w, std::min(link_capacity(net.gain(l, i, j)), widest[l + 1][j]));
            widest[l][i] = w;
        }
    }
    double opt = 0.0;
    for (int i = 0; i < N; ++i) opt = std::max(opt, std::min(link_capacity(net.gain(0, 0, i)), widest[1][i]));

    Route route;
    route.bits = opt;
    int prev = 0;
    for (int l = 1; l <= L; ++l) {
        int pick = -1;
        for (int j = 0; j < N && pick < 0; ++j) {
            if (link_capacity(net.gain(l - 1, prev, j)) >= opt && widest[l][j] >= opt) pick = j;
        }
        route.selection.per_layer.push_back({pick});
        prev = pick;
    }
    return route;
}

}  // namespace relaynet
