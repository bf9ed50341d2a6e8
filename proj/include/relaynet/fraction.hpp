#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "relaynet/errors.hpp"

namespace relaynet {

/// Reduced nonnegative rational number.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (d <= 0 || n < 0) throw DomainError("Fraction: need num >= 0 and den > 0");
        const auto g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
};

}  // namespace relaynet
