#include "relaynet/network_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "relaynet/errors.hpp"

namespace relaynet {

namespace {

using nlohmann::json;

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("network document: " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

long long integer(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<long long>();
}

double real(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, "non-finite value");
    return x;
}

}  // namespace

std::string serialize(const LayeredNetwork& net) {
    std::string out = "{\"version\":1,\"L\":" + std::to_string(net.layers()) +
                      ",\"N\":" + std::to_string(net.relays()) + ",\"layers\":[";
    for (int l = 0; l <= net.layers(); ++l) {
        const auto& h = net.matrix(l);
        if (l > 0) out += ',';
        out += "{\"n_rx\":" + std::to_string(h.n_rx()) + ",\"n_tx\":" + std::to_string(h.n_tx()) +
               ",\"entries\":[";
        bool first = true;
        for (const auto& g : h.entries()) {
            if (!first) out += ',';
            first = false;
            out += '[';
            append_number(out, g.real());
            out += ',';
            append_number(out, g.imag());
            out += ']';
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

LayeredNetwork parse_network(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::exception& e) {
        fail("document", std::string("malformed JSON (") + e.what() + ")");
    }
    if (integer(doc, "version", "document") != 1) fail("version", "unsupported version");
    const long long L = integer(doc, "L", "document");
    const long long N = integer(doc, "N", "document");
    if (L < 1) fail("L", "must be >= 1");
    if (N < 1 || N > kMaxNodesPerLayer) fail("N", "must be in [1, " + std::to_string(kMaxNodesPerLayer) + "]");
    const auto& layers = field(doc, "layers", "document");
    if (!layers.is_array()) fail("layers", "expected an array");
    if (layers.size() != static_cast<std::size_t>(L + 1)) {
        fail("layers", "has " + std::to_string(layers.size()) + " entries, expected L+1 = " +
                           std::to_string(L + 1));
    }

    std::vector<ChannelMatrix> matrices;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const std::string where = "layers[" + std::to_string(l) + "]";
        const auto& layer = layers[l];
        const long long rx = integer(layer, "n_rx", where);
        const long long tx = integer(layer, "n_tx", where);
        const long long want_rx = l == static_cast<std::size_t>(L) ? 1 : N;
        const long long want_tx = l == 0 ? 1 : N;
        if (rx != want_rx || tx != want_tx) {
            fail(where, "matrix is " + std::to_string(rx) + "x" + std::to_string(tx) + ", expected " +
                            std::to_string(want_rx) + "x" + std::to_string(want_tx));
        }
        const auto& entries = field(layer, "entries", where);
        if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rx * tx)) {
            fail(where + ".entries", "expected an array of " + std::to_string(rx * tx) + " [re,im] pairs");
        }
        std::vector<ComplexGain> values;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string at = where + ".entries[" + std::to_string(i) + "]";
            const auto& e = entries[i];
            if (!e.is_array() || e.size() != 2) fail(at, "expected [re, im]");
            values.emplace_back(real(e[0], at), real(e[1], at));
        }
        matrices.emplace_back(static_cast<std::size_t>(rx), static_cast<std::size_t>(tx), std::move(values));
    }
    return LayeredNetwork(static_cast<int>(L), static_cast<int>(N), std::move(matrices));
}

}  // namespace relaynet
