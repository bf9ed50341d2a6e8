#pragma once

#include <cstdint>
#include <random>

namespace relaynet {

/// Seed for stream `index` of a campaign. Each Monte Carlo trial draws from its
/// own stream so results do not depend on how trials are scheduled.
std::uint64_t stream_seed(std::uint64_t campaign_seed, std::uint64_t index);

/// Seeded random source with platform-independent conversions: the engine's
/// output sequence is fixed by the standard, and the real-valued draws below
/// do not go through the implementation-defined std:: distributions.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal (Box-Muller, both halves used).
    double normal();

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace relaynet
