#pragma once

#include <string>
#include <string_view>

#include "relaynet/network.hpp"

namespace relaynet {

/// JSON network document:
/// {"version":1,"L":..,"N":..,"layers":[{"n_rx":..,"n_tx":..,"entries":[[re,im],..]},..]}
/// Numbers carry 17 significant digits, so parse(serialize(x)) == x.
std::string serialize(const LayeredNetwork& net);

/// Throws ParseError naming the offending location (e.g. "layers[2].n_rx").
LayeredNetwork parse_network(std::string_view document);

}  // namespace relaynet
