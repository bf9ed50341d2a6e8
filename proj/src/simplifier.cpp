#include "relaynet/simplifier.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaynet/cut_bounds.hpp"
#include "relaynet/detail/enumeration.hpp"
#include "relaynet/errors.hpp"
#include "relaynet/generators.hpp"
#include "relaynet/rng.hpp"

namespace relaynet {

namespace {

void guarantee(const LayeredNetwork& net, int k, SimplificationResult& r) {
    const int L = net.layers();
    const int N = net.relays();
    if (k == N) {
        r.guarantee_fraction = Fraction(1);
        r.gap_constant_bits = 0.0;
    } else if (k == 1) {
        r.guarantee_fraction = alpha(L, N);
        r.gap_constant_bits = 4.0 * std::log2(static_cast<double>(N));
    } else if (L == 2 && N == 3 && k == 2) {
        r.guarantee_fraction = Fraction(1, 2);
        r.gap_constant_bits = 1.5 * std::log2(3.0);
    } else {
        r.guarantee_fraction = Fraction(0);
        r.gap_constant_bits = 0.0;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SimplificationResult best_subnetwork(const LayeredNetwork& net, int k, const EnumerationLimits& limits) {
    const int L = net.layers();
    const int N = net.relays();
    if (k < 1 || k > N) throw DomainError("best_subnetwork: k must be in [1, N]");

    const auto choices = detail::k_subsets(N, k);
    double work = std::pow(static_cast<double>(choices.size()), L) * std::ldexp(1.0, k * L);
    if (work > std::ldexp(1.0, limits.max_cut_bits)) {
        throw BudgetExceeded("best_subnetwork: C(N,k)^L * 2^(kL) exceeds 2^" +
                             std::to_string(limits.max_cut_bits));
    }

    SimplificationResult r;
    r.k = k;
    r.full_capacity_bits = approx_capacity(net, limits).c_bar_bits;
    r.best_sub_capacity_bits = -1.0;

    std::vector<std::size_t> pick(static_cast<std::size_t>(L), 0);
    while (true) {
        SubnetworkSelection sel;
        for (std::size_t c : pick) sel.per_layer.push_back(detail::members(choices[c]));
        const double bits = approx_capacity(extract_subnetwork(net, sel), limits).c_bar_bits;
        if (bits > r.best_sub_capacity_bits) {
            r.best_sub_capacity_bits = bits;
            r.best_selection = std::move(sel);
        }
        int l = L - 1;
        for (; l >= 0; --l) {
            if (++pick[static_cast<std::size_t>(l)] < choices.size()) break;
            pick[static_cast<std::size_t>(l)] = 0;
        }
        if (l < 0) break;
    }

    if (k == 1) {
        const Route route = best_route(net);
        if (route.bits != r.best_sub_capacity_bits || route.selection != r.best_selection) {
            throw std::logic_error("best_subnetwork: k=1 search disagrees with best_route");
        }
    }

    r.ratio = r.full_capacity_bits > 0.0 ? r.best_sub_capacity_bits / r.full_capacity_bits : 0.0;
    guarantee(net, k, r);
    r.inequality_holds = r.best_sub_capacity_bits >=
                         r.guarantee_fraction.value() * r.full_capacity_bits - r.gap_constant_bits - kBoundTolerance;
    return r;
}

VerificationRecord verify_theorem1(const LayeredNetwork& net, const EnumerationLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord v;
    v.layers = net.layers();
    v.relays = net.relays();
    v.result = best_subnetwork(net, 1, limits);
    v.c_tilde_bits = c_tilde_k1(net, limits).c_bar_bits;
    const double a = v.result.guarantee_fraction.value();
    v.slack_gap_form = v.result.best_sub_capacity_bits - (a * v.result.full_capacity_bits - v.result.gap_constant_bits);
    v.slack_sharp_form = v.result.best_sub_capacity_bits - a * v.c_tilde_bits;
    v.sharpened_holds = v.slack_sharp_form >= -kBoundTolerance;
    v.runtime_seconds = seconds_since(start);
    return v;
}

VerificationRecord verify_theorem2(const LayeredNetwork& net, const EnumerationLimits& limits) {
    if (net.layers() != 2 || net.relays() != 3) throw DomainError("verify_theorem2: requires L=2, N=3");
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord v;
    v.layers = 2;
    v.relays = 3;
    v.result = best_subnetwork(net, 2, limits);
    v.c_tilde_bits = c_tilde_k2(net);
    v.slack_gap_form = v.result.best_sub_capacity_bits - (0.5 * v.result.full_capacity_bits - v.result.gap_constant_bits);
    v.slack_sharp_form = v.result.best_sub_capacity_bits - 0.5 * v.c_tilde_bits;
    v.sharpened_holds = v.slack_sharp_form >= -kBoundTolerance;
    v.runtime_seconds = seconds_since(start);
    return v;
}

TightnessResult tightness_check(const LayeredNetwork& net, int k, Fraction target, const EnumerationLimits& limits) {
    const auto r = best_subnetwork(net, k, limits);
    return {r.ratio, r.ratio <= target.value() + kBoundTolerance};
}

SearchResult adversarial_search(int layers, int relays, int k, std::uint64_t trials, std::uint64_t seed,
                                const EnumerationLimits& limits) {
    const double cmax = kSearchMaxCapacity;
    RandomStream rng(stream_seed(seed, 0));
    const LayeredNetwork start = random_network(layers, relays, UniformCapacity{0.0, cmax}, rng.next());

    // Link capacities of every matrix, mirrored by the current network.
    std::vector<std::vector<double>> caps;
    for (const auto& h : start.matrices()) {
        std::vector<double> c;
        for (const auto& g : h.entries()) c.push_back(link_capacity(g));
        caps.push_back(std::move(c));
    }
    const auto build = [&] {
        std::vector<ChannelMatrix> m;
        for (std::size_t l = 0; l < caps.size(); ++l) {
            const auto& shape = start.matrix(static_cast<int>(l));
            ChannelMatrix h(shape.n_rx(), shape.n_tx());
            for (std::size_t e = 0; e < caps[l].size(); ++e) h.set(e / shape.n_tx(), e % shape.n_tx(), gain_from_capacity(caps[l][e]));
            m.push_back(std::move(h));
        }
        return LayeredNetwork(layers, relays, std::move(m));
    };
    // Objective is the ratio, with near-empty networks ruled out.
    const auto score = [&](const SimplificationResult& r) {
        return r.full_capacity_bits >= 1.0 ? r.ratio : HUGE_VAL;
    };

    const auto first = best_subnetwork(start, k, limits);
    SearchResult best{start, first.ratio, 0};
    double current = score(first);

    std::size_t links = 0;
    for (const auto& c : caps) links += c.size();
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t pick = rng.below(links);
        std::size_t l = 0;
        while (pick >= caps[l].size()) pick -= caps[l++].size();
        double& slot = caps[l][pick];
        const double old = slot;
        switch (rng.below(4)) {
            case 0: slot = rng.uniform(0.0, cmax); break;
            case 1: slot = 0.0; break;
            case 2: slot = old > 0.0 ? std::min(cmax, old * std::exp2(rng.normal())) : rng.uniform(0.0, 1.0); break;
            default: slot = cmax; break;
        }
        LayeredNetwork candidate = build();
        const auto r = best_subnetwork(candidate, k, limits);
        const double s = score(r);
        if (s <= current) {
            current = s;
            best.network = std::move(candidate);
            best.ratio = r.ratio;
            ++best.accepted_moves;
        } else {
            slot = old;
        }
    }
    return best;
}

}  // namespace relaynet
