#include "relaynet/generators.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "relaynet/errors.hpp"
#include "relaynet/rng.hpp"

namespace relaynet {

namespace {

std::vector<double> parse_numbers(std::string_view rest, std::string_view spec) {
    std::vector<double> out;
    while (!rest.empty()) {
        const auto colon = rest.find(':');
        const auto token = rest.substr(0, colon);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw DomainError("distribution '" + std::string(spec) + "': bad number '" +
                              std::string(token) + "'");
        }
        out.push_back(v);
        if (colon == std::string_view::npos) break;
        rest.remove_prefix(colon + 1);
    }
    return out;
}

void check_range(double lo, double hi, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi < lo) {
        throw DomainError(std::string(what) + ": need finite 0 <= lo <= hi");
    }
}

void validate(const GainDistribution& dist) {
    if (const auto* r = std::get_if<Rayleigh>(&dist)) {
        if (!std::isfinite(r->sigma) || r->sigma < 0.0) {
            throw DomainError("rayleigh: sigma must be finite and >= 0");
        }
    } else if (const auto* g = std::get_if<UniformGain>(&dist)) {
        check_range(g->lo, g->hi, "uniform-gain");
    } else {
        const auto& c = std::get<UniformCapacity>(dist);
        check_range(c.lo, c.hi, "uniform-capacity");
    }
}

ComplexGain draw(const GainDistribution& dist, RandomStream& rng) {
    if (const auto* r = std::get_if<Rayleigh>(&dist)) {
        const double s = r->sigma / std::numbers::sqrt2;
        const double re = rng.normal();
        const double im = rng.normal();
        return {s * re, s * im};
    }
    if (const auto* g = std::get_if<UniformGain>(&dist)) {
        const double mag = rng.uniform(g->lo, g->hi);
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        return std::polar(mag, phase);
    }
    const auto& c = std::get<UniformCapacity>(dist);
    return gain_from_capacity(rng.uniform(c.lo, c.hi));
}

void check_shape(int layers, int relays, double c) {
    if (layers < 1) throw DomainError("adversarial construction: layers must be >= 1");
    if (relays < 2 || relays > kMaxNodesPerLayer) {
        throw DomainError("adversarial construction: relays must be >= 2");
    }
    if (!std::isfinite(c) || c <= 0.0) {
        throw DomainError("adversarial construction: base capacity must be finite and > 0");
    }
}

// Capacity grids (rx x tx) for every layer, filled with `fill`.
using CapacityGrid = std::vector<std::vector<double>>;

std::vector<CapacityGrid> grids(int layers, int relays, double fill) {
    const auto n = static_cast<std::size_t>(relays);
    std::vector<CapacityGrid> g;
    for (int l = 0; l <= layers; ++l) {
        const std::size_t rx = l == layers ? 1 : n;
        const std::size_t tx = l == 0 ? 1 : n;
        g.emplace_back(rx, std::vector<double>(tx, fill));
    }
    return g;
}

LayeredNetwork from_capacities(int layers, int relays, const std::vector<CapacityGrid>& caps) {
    std::vector<ChannelMatrix> m;
    for (const auto& grid : caps) {
        ChannelMatrix h(grid.size(), grid.front().size());
        for (std::size_t r = 0; r < grid.size(); ++r)
            for (std::size_t t = 0; t < grid[r].size(); ++t) h.set(r, t, gain_from_capacity(grid[r][t]));
        m.push_back(std::move(h));
    }
    return LayeredNetwork(layers, relays, std::move(m));
}

// Inner layers shared by both parities. In odd layers the relays 1..N-1 only
// reach their own index (weak link); in even layers only N -> N is weak.
void fill_inner_layers(std::vector<CapacityGrid>& caps, int layers, int relays, double weak) {
    const int last = relays - 1;
    for (int l = 1; l < layers; ++l) {
        auto& g = caps[static_cast<std::size_t>(l)];
        if (l % 2 == 1) {
            for (int rx = 0; rx < last; ++rx)
                for (int tx = 0; tx < last; ++tx) g[rx][tx] = rx == tx ? weak : 0.0;
        } else {
            g[last][last] = weak;
        }
    }
}

}  // namespace

GainDistribution parse_distribution(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    const auto rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    const auto nums = parse_numbers(rest, spec);
    GainDistribution dist;
    if (name == "zero" && nums.empty()) {
        dist = UniformCapacity{0.0, 0.0};
    } else if (name == "rayleigh" && nums.size() <= 1) {
        dist = Rayleigh{nums.empty() ? 1.0 : nums[0]};
    } else if (name == "uniform-gain" && nums.size() == 2) {
        dist = UniformGain{nums[0], nums[1]};
    } else if (name == "uniform-capacity" && nums.size() == 2) {
        dist = UniformCapacity{nums[0], nums[1]};
    } else {
        throw DomainError("unknown distribution '" + std::string(spec) +
                          "' (expected rayleigh:SIGMA, uniform-gain:LO:HI, "
                          "uniform-capacity:LO:HI or zero)");
    }
    validate(dist);
    return dist;
}

std::string to_string(const GainDistribution& dist) {
    std::ostringstream os;
    os.precision(17);
    if (const auto* r = std::get_if<Rayleigh>(&dist)) {
        os << "rayleigh:" << r->sigma;
    } else if (const auto* g = std::get_if<UniformGain>(&dist)) {
        os << "uniform-gain:" << g->lo << ':' << g->hi;
    } else {
        const auto& c = std::get<UniformCapacity>(dist);
        os << "uniform-capacity:" << c.lo << ':' << c.hi;
    }
    return os.str();
}

LayeredNetwork random_network(int layers, int relays, const GainDistribution& dist,
                              std::uint64_t seed) {
    if (layers < 1 || relays < 1) throw DomainError("random_network: layers and relays must be >= 1");
    validate(dist);
    auto net = LayeredNetwork::zeros(layers, relays);
    RandomStream rng(seed);
    std::vector<ChannelMatrix> m;
    for (int l = 0; l <= layers; ++l) {
        ChannelMatrix h = net.matrix(l);
        for (std::size_t r = 0; r < h.n_rx(); ++r)
            for (std::size_t t = 0; t < h.n_tx(); ++t) h.set(r, t, draw(dist, rng));
        m.push_back(std::move(h));
    }
    return LayeredNetwork(layers, relays, std::move(m));
}

LayeredNetwork construct_adversarial_odd(int layers, int relays, double base_capacity) {
    check_shape(layers, relays, base_capacity);
    if (layers % 2 == 0) throw DomainError("construct_adversarial_odd: L must be odd");
    const double c = base_capacity;
    const double weak = 2.0 * c / ((layers - 1) * relays + 4);
    const int last = relays - 1;

    auto caps = grids(layers, relays, c);
    caps[0][static_cast<std::size_t>(last)][0] = weak;
    fill_inner_layers(caps, layers, relays, weak);
    auto& out = caps[static_cast<std::size_t>(layers)][0];
    for (int i = 1; i < last; ++i) out[static_cast<std::size_t>(i)] = 0.0;
    out[0] = weak;
    out[static_cast<std::size_t>(last)] = c;
    return from_capacities(layers, relays, caps);
}

LayeredNetwork construct_adversarial_even(int layers, int relays, double base_capacity) {
    check_shape(layers, relays, base_capacity);
    if (layers % 2 != 0) throw DomainError("construct_adversarial_even: L must be even");
    const double c = base_capacity;
    const double weak = 2.0 * c / (layers * relays + 2);
    const int last = relays - 1;

    auto caps = grids(layers, relays, c);
    caps[0][static_cast<std::size_t>(last)][0] = weak;
    fill_inner_layers(caps, layers, relays, weak);
    caps[static_cast<std::size_t>(layers)][0][static_cast<std::size_t>(last)] = weak;
    return from_capacities(layers, relays, caps);
}

Cut adversarial_cut(int layers, int relays) {
    const NodeSet last = NodeSet{1} << (relays - 1);
    const NodeSet others = last - 1;
    Cut cut;
    for (int l = 1; l <= layers; ++l) cut.source_side.push_back(l % 2 == 1 ? others : last);
    return cut;
}

}  // namespace relaynet
