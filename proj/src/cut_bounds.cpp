#include "relaynet/cut_bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "relaynet/detail/enumeration.hpp"
#include "relaynet/errors.hpp"

namespace relaynet {

namespace {

int size_of(NodeSet s) { return std::popcount(s); }

void require_l2n3(const LayeredNetwork& net, const char* what) {
    if (net.layers() != 2 || net.relays() != 3) {
        throw DomainError(std::string(what) + ": requires L=2, N=3 (got L=" +
                          std::to_string(net.layers()) + ", N=" + std::to_string(net.relays()) + ")");
    }
}

// Class id of a (|y1|, |y2|) pattern without reflection, 8 if none.
int direct_class(int a, int b) {
    static const std::map<std::pair<int, int>, int> table{
        {{0, 0}, 1}, {{1, 0}, 2}, {{1, 1}, 3}, {{1, 2}, 4}, {{2, 0}, 5}, {{2, 1}, 6}, {{3, 0}, 7}};
    const auto it = table.find({a, b});
    return it == table.end() ? 8 : it->second;
}

// Network whose representative-cut structure matches the classified cut:
// entry (rx j, tx i) of layer l is taken from (relabel(j), relabel(i)).
LayeredNetwork relabeled(const LayeredNetwork& frame, const CutClass& cls) {
    std::vector<ChannelMatrix> m;
    for (int l = 0; l <= 2; ++l) {
        const auto& h = frame.matrix(l);
        ChannelMatrix out(h.n_rx(), h.n_tx());
        for (std::size_t j = 0; j < h.n_rx(); ++j) {
            for (std::size_t i = 0; i < h.n_tx(); ++i) {
                const std::size_t rj = l == 2 ? j : static_cast<std::size_t>(cls.relabel[static_cast<std::size_t>(l)][j]);
                const std::size_t ri = l == 0 ? i : static_cast<std::size_t>(cls.relabel[static_cast<std::size_t>(l - 1)][i]);
                out.set(j, i, h(rj, ri));
            }
        }
        m.push_back(std::move(out));
    }
    return LayeredNetwork(2, 3, std::move(m));
}

// Evaluates the Table families on a network already brought into the
// representative's frame.
class Families {
public:
    explicit Families(const LayeredNetwork& net) : net_(net) {}

    double r0(int i) const { return link_capacity(net_.gain(0, 0, i)); }
    double r1(int tx, int rx) const { return link_capacity(net_.gain(1, tx, rx)); }
    double r2(int i) const { return link_capacity(net_.gain(2, i, 0)); }
    double m1(NodeSet tx, NodeSet rx) const { return mimo_capacity(net_.matrix(1).submatrix(rx, tx)); }

    double max_r0(NodeSet s) const { return max_over(s, [&](int i) { return r0(i); }); }
    double max_r2(NodeSet s) const { return max_over(s, [&](int i) { return r2(i); }); }
    double max_row(int tx, NodeSet rx) const { return max_over(rx, [&](int j) { return r1(tx, j); }); }
    double max_col(NodeSet tx, int rx) const { return max_over(tx, [&](int i) { return r1(i, rx); }); }

    // Largest M1 from `tx` into any two receivers.
    double best_m1_pairs(NodeSet tx) const {
        double best = 0.0;
        for (NodeSet v : detail::k_subsets(3, 2)) best = std::max(best, m1(tx, v));
        return best;
    }

private:
    template <typename F>
    static double max_over(NodeSet s, const F& f) {
        double best = 0.0;
        for (int i : detail::members(s)) best = std::max(best, f(i));
        return best;
    }

    const LayeredNetwork& net_;
};

constexpr NodeSet kAll = 0b111;

NodeSet bit(int i) { return NodeSet{1} << i; }

}  // namespace

int t_of_profile(const std::vector<int>& sizes, int relays) {
    int t = 0;
    int prev = 1;
    for (int s : sizes) {
        t += std::min(prev, relays - s);
        prev = s;
    }
    return t + std::min(prev, 1);
}

int t_of_cut(const Cut& cut, int relays) {
    cut.validate(cut.layers(), relays);
    std::vector<int> sizes;
    for (NodeSet y : cut.source_side) sizes.push_back(size_of(y));
    return t_of_profile(sizes, relays);
}

MaxTResult max_t(int layers, int relays, std::uint64_t max_profiles) {
    if (layers < 1 || relays < 1) throw DomainError("max_t: layers and relays must be >= 1");
    std::uint64_t count = 1;
    for (int l = 0; l < layers; ++l) {
        if (count > max_profiles / static_cast<std::uint64_t>(relays + 1)) {
            throw BudgetExceeded("max_t: (N+1)^L exceeds the profile budget of " + std::to_string(max_profiles));
        }
        count *= static_cast<std::uint64_t>(relays + 1);
    }
    MaxTResult r;
    const bool odd = layers % 2 == 1;
    r.closed_form = odd ? (layers - 1) * relays / 2 + 2 : layers * relays / 2 + 2;
    r.relaxation_bound = odd ? r.closed_form : layers * relays / 2 + 1;
    r.brute_max = -1;

    std::vector<int> s(static_cast<std::size_t>(layers), 0);
    for (std::uint64_t n = 0; n < count; ++n) {
        const int t = t_of_profile(s, relays);
        if (t > r.brute_max) {
            r.brute_max = t;
            r.argmax_profile = s;
        }
        // Odometer with the last layer fastest, so profiles run in lexicographic order.
        for (int l = layers - 1; l >= 0; --l) {
            if (++s[static_cast<std::size_t>(l)] <= relays) break;
            s[static_cast<std::size_t>(l)] = 0;
        }
    }
    r.profiles_evaluated = count;
    return r;
}

Fraction alpha(int layers, int relays) {
    if (layers < 1 || relays < 1) throw DomainError("alpha: layers and relays must be >= 1");
    return layers % 2 == 1 ? Fraction(2, (layers - 1) * relays + 4) : Fraction(2, layers * relays + 2);
}

double c_tilde_k1_gap_bits(int layers, int relays) {
    return (2.0 + 2.0 * relays * (layers - 1)) * std::log2(static_cast<double>(relays));
}

double c_tilde_k2_gap_bits() { return 3.0 * std::log2(3.0); }

CapacityResult c_tilde_k1(const LayeredNetwork& net, const EnumerationLimits& limits) {
    const int L = net.layers();
    const int N = net.relays();
    const int bits = L * N;
    if (bits > limits.max_cut_bits || bits > 62) {
        throw BudgetExceeded("c_tilde_k1: L*N = " + std::to_string(bits) +
                             " exceeds the enumeration budget of " + std::to_string(limits.max_cut_bits));
    }
    if (N + N > static_cast<int>(detail::kMaxTableBits)) {
        throw BudgetExceeded("c_tilde_k1: N too large for per-layer tables");
    }
    const NodeSet full = ChannelMatrix::full_set(static_cast<std::size_t>(N));
    std::vector<detail::SubsetTable> tables;
    for (int l = 0; l <= L; ++l) {
        const auto& h = net.matrix(l);
        tables.emplace_back(h, [&h](NodeSet tx, NodeSet rx) {
            double best = 0.0;
            for (int i : detail::members(tx))
                for (int j : detail::members(rx)) best = std::max(best, link_capacity(h(static_cast<std::size_t>(j), static_cast<std::size_t>(i))));
            return std::min(size_of(tx), size_of(rx)) * best;
        });
    }
    const std::uint64_t count = std::uint64_t{1} << bits;
    const auto best = detail::parallel_min(count, limits.workers, [&](std::uint64_t index) {
        double value = 0.0;
        NodeSet prev = 1;
        for (int l = 0; l < L; ++l) {
            const NodeSet y = detail::cut_layer(index, l + 1, L, N);
            value += tables[static_cast<std::size_t>(l)](prev, full & ~y);
            prev = y;
        }
        value += tables[static_cast<std::size_t>(L)](prev, 1);
        return value;
    });
    return {best.value, detail::decode_cut(best.index, L, N), count};
}

LayeredNetwork reflect(const LayeredNetwork& net) {
    std::vector<ChannelMatrix> m;
    for (int l = net.layers(); l >= 0; --l) m.push_back(net.matrix(l).transposed());
    return LayeredNetwork(net.layers(), net.relays(), std::move(m));
}

Cut reflect(const Cut& cut, int relays) {
    const NodeSet full = ChannelMatrix::full_set(static_cast<std::size_t>(relays));
    Cut out;
    for (auto it = cut.source_side.rbegin(); it != cut.source_side.rend(); ++it) out.source_side.push_back(full & ~*it);
    return out;
}

Cut class_representative(int class_id) {
    switch (class_id) {
        case 1: return Cut{{0, 0}};
        case 2: return Cut{{bit(2), 0}};
        case 3: return Cut{{bit(2), bit(0)}};
        case 4: return Cut{{bit(2), bit(0) | bit(1)}};
        case 5: return Cut{{bit(1) | bit(2), 0}};
        case 6: return Cut{{bit(1) | bit(2), bit(0)}};
        case 7: return Cut{{kAll, 0}};
        default: throw DomainError("class_representative: class id must be in 1..7");
    }
}

CutClass classify_cut_l2n3(const Cut& cut) {
    cut.validate(2, 3);
    CutClass cls;
    Cut frame = cut;
    cls.id = direct_class(size_of(cut.source_side[0]), size_of(cut.source_side[1]));
    if (cls.id == 8) {
        frame = reflect(cut, 3);
        cls.id = direct_class(size_of(frame.source_side[0]), size_of(frame.source_side[1]));
        if (cls.id == 8) return CutClass{};
        cls.reflected = true;
    }
    const Cut rep = class_representative(cls.id);
    for (std::size_t l = 0; l < 2; ++l) {
        const NodeSet want = frame.source_side[l];
        const NodeSet have = rep.source_side[l];
        const auto place = [&](NodeSet from, NodeSet to) {
            const auto src = detail::members(from);
            const auto dst = detail::members(to);
            for (std::size_t k = 0; k < src.size(); ++k) cls.relabel[l][static_cast<std::size_t>(src[k])] = dst[k];
        };
        place(have, want);
        place(kAll & ~have, kAll & ~want);
    }
    return cls;
}

double class_gap_bits(int class_id) {
    const double l3 = std::log2(3.0);
    switch (class_id) {
        case 1: return l3;
        case 2: return l3 + 1.0;
        case 3:
        case 4:
        case 6: return 2.0;
        case 5: return 2.0 * l3;
        case 7: return 3.0 * l3;
        case 8: return 0.0;
        default: throw DomainError("class_gap_bits: class id must be in 1..8");
    }
}

FBoundResult f_bound_l2n3(const LayeredNetwork& net, const Cut& cut) {
    require_l2n3(net, "f_bound_l2n3");
    const CutClass cls = classify_cut_l2n3(cut);
    FBoundResult r;
    r.class_id = cls.id;
    r.g_y_bits = class_gap_bits(cls.id);
    const double l3 = std::log2(3.0);
    const auto add = [&r](std::string label, double value, double gap) {
        r.labels.push_back(std::move(label));
        r.f_values.push_back(value);
        r.member_gaps.push_back(gap);
    };

    if (cls.id == 8) {
        add("cut", cut_value(net, cut), 0.0);
    } else {
        const LayeredNetwork frame = relabeled(cls.reflected ? reflect(net) : net, cls);
        const Families f(frame);
        const NodeSet s01 = bit(0) | bit(1);
        const NodeSet s12 = bit(1) | bit(2);
        switch (cls.id) {
            case 1:
                add("f1", f.max_r0(kAll), l3);
                break;
            case 2:
                add("f2", f.max_r0(s01) + f.max_row(2, kAll), l3 + 1.0);
                break;
            case 3:
                add("f3", f.max_r0(s01) + f.max_row(2, s12) + f.r2(0), 2.0);
                break;
            case 4:
                add("f4", f.max_r0(s01) + f.r1(2, 2) + f.max_r2(s01), 2.0);
                break;
            case 5:
                add("f5.1", f.r0(0) + f.best_m1_pairs(s12), l3);
                add("f5.2", f.r0(0) + f.max_row(1, kAll) + f.max_row(2, kAll), 2.0 * l3);
                for (int p = 0; p < 3; ++p) {
                    add("f5.3[p=" + std::to_string(p) + "]",
                        f.r0(0) + f.max_col(s12, p) + f.m1(s12, kAll & ~bit(p)), 1.0);
                }
                break;
            case 6:
                add("f6.1", f.r0(0) + f.max_row(1, s12) + f.max_row(2, s12) + f.r2(0), 2.0);
                add("f6.2", f.r0(0) + f.max_col(s12, 1) + f.max_col(s12, 2) + f.r2(0), 2.0);
                add("f6.3", f.r0(0) + f.m1(s12, s12) + f.r2(0), 0.0);
                break;
            case 7: {
                double best = 0.0;
                for (NodeSet u : detail::k_subsets(3, 2)) best = std::max(best, f.best_m1_pairs(u));
                add("f7.1", 1.5 * best, 3.0 * l3);
                for (int p = 0; p < 3; ++p) {
                    add("f7.2[p=" + std::to_string(p) + "]",
                        f.max_row(p, kAll) + f.best_m1_pairs(kAll & ~bit(p)), 2.0 * l3);
                }
                break;
            }
        }
    }
    r.min_f_bits = *std::min_element(r.f_values.begin(), r.f_values.end());
    return r;
}

double c_tilde_k2(const LayeredNetwork& net) {
    require_l2n3(net, "c_tilde_k2");
    double best = std::numeric_limits<double>::infinity();
    for (NodeSet y1 = 0; y1 <= kAll; ++y1)
        for (NodeSet y2 = 0; y2 <= kAll; ++y2) best = std::min(best, f_bound_l2n3(net, Cut{{y1, y2}}).min_f_bits);
    return best;
}

}  // namespace relaynet
