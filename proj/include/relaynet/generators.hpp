#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "relaynet/network.hpp"

namespace relaynet {

/// Circularly-symmetric complex Gaussian entries with E|h|^2 = sigma^2.
struct Rayleigh {
    double sigma = 1.0;
};

/// Gain magnitude uniform on [lo, hi] with a uniform phase.
struct UniformGain {
    double lo = 0.0;
    double hi = 1.0;
};

/// Link capacity uniform on [lo, hi] bits, mapped through gain_from_capacity.
struct UniformCapacity {
    double lo = 0.0;
    double hi = 1.0;
};

using GainDistribution = std::variant<Rayleigh, UniformGain, UniformCapacity>;

/// Parses "rayleigh:SIGMA", "uniform-gain:LO:HI", "uniform-capacity:LO:HI" or
/// "zero" (all-zero gains).
GainDistribution parse_distribution(std::string_view spec);
std::string to_string(const GainDistribution& dist);

/// All L+1 matrices drawn entry-by-entry (layer order, row-major) from one
/// stream seeded with `seed`.
LayeredNetwork random_network(int layers, int relays, const GainDistribution& dist,
                              std::uint64_t seed);

/// Tightness construction for odd L, alpha = 2/((L-1)N+4). Links the
/// construction leaves unspecified and that do not cross its minimum cut get
/// capacity c, so that moving any node across that cut costs c.
LayeredNetwork construct_adversarial_odd(int layers, int relays, double base_capacity);

/// Tightness construction for even L, alpha = 2/(LN+2). Same completion rule.
LayeredNetwork construct_adversarial_even(int layers, int relays, double base_capacity);

/// Source-side relay sets of the minimum cut the constructions above are built
/// around (1..N-1 in odd layers, {N} in even layers).
Cut adversarial_cut(int layers, int relays);

}  // namespace relaynet
