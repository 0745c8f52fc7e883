#include "flowforge/io.hpp"

#include <json.hpp>

#include <set>

namespace flowforge {

Multigraph from_json_edgelist(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid json: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("expected object with \"n\" and \"edges\"", 0);
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
    int n = j["n"].get<int>();
    if (n < 0) throw ParseError("\"n\" must be nonnegative", 0);
    std::vector<std::pair<int, int>> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw ParseError("edge entries must be [u,v] integer pairs", 0);
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return Multigraph::build(n, edges);
}

std::string to_json_edgelist(const Multigraph& g) {
    // emitted by hand so key order and spacing are canonical
    std::string out = "{\"n\":" + std::to_string(g.vertex_count()) + ",\"edges\":[";
    for (int id = 0; id < g.edge_count(); ++id) {
        if (id) out += ',';
        const Edge& e = g.edges()[id];
        out += '[' + std::to_string(e.u) + ',' + std::to_string(e.v) + ']';
    }
    out += "]}";
    return out;
}

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

Multigraph from_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    size_t pos = 0;
    auto byte = [&](size_t at) -> int {
        if (at >= s.size()) throw ParseError("truncated graph6 data", at);
        int c = static_cast<unsigned char>(s[at]);
        if (c < kG6Lo || c > kG6Hi) throw ParseError("byte outside graph6 alphabet", at);
        return c - kG6Lo;
    };
    long n;
    if (s.empty()) throw ParseError("empty graph6 string", 0);
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (s.size() < 4) throw ParseError("truncated graph6 header", s.size());
        if (byte(1) == 63) throw ParseError("graph6 orders >= 2^18 unsupported", 1);
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                cur = byte(pos++);
                bit = 6;
            }
            if (cur & (1 << (bit - 1))) edges.emplace_back(u, v);
            --bit;
        }
    }
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return Multigraph::build(static_cast<int>(n), edges);
}

std::string to_graph6(const Multigraph& g) {
    std::set<std::pair<int, int>> adj;
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (!adj.insert({key.first, key.second}).second) throw Graph6MultiEdgeUnsupported();
    }
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kG6Lo);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + kG6Lo);
        out += static_cast<char>(((n >> 6) & 63) + kG6Lo);
        out += static_cast<char>((n & 63) + kG6Lo);
    }
    int bit = 5;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (adj.count({u, v})) cur |= 1 << bit;
            if (bit == 0) {
                out += static_cast<char>(cur + kG6Lo);
                cur = 0;
                bit = 6;
            }
            --bit;
        }
    }
    if (bit != 5) out += static_cast<char>(cur + kG6Lo);
    return out;
}

Multigraph parse_graph(const std::string& text, Format format) {
    return format == Format::JsonEdgeList ? from_json_edgelist(text) : from_graph6(text);
}

std::string serialize_graph(const Multigraph& g, Format format) {
    return format == Format::JsonEdgeList ? to_json_edgelist(g) : to_graph6(g);
}

}  // namespace flowforge
