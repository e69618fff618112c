#include "cactus/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace cactus {

Graph parse_graph6(std::string_view text) {
    // Tolerate a trailing newline and the optional format header.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
    if (text.empty()) throw MalformedGraph6("empty graph6 string");

    int c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw MalformedGraph6("graphs with n >= 63 are not supported");
    if (c0 < 63 || c0 > 125) throw MalformedGraph6("invalid graph6 size character");
    int n = c0 - 63;

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t need = (nbits + 5) / 6;
    if (text.size() != 1 + need)
        throw MalformedGraph6("graph6 payload has wrong length for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> pairs;
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int ch = static_cast<unsigned char>(text[1 + bit / 6]);
            if (ch < 63 || ch > 126) throw MalformedGraph6("invalid graph6 data character");
            if ((ch - 63) & (1 << (5 - bit % 6))) pairs.emplace_back(i, j);
        }
    }
    // Padding bits must be zero so emit(parse(s)) == s.
    for (; bit < need * 6; ++bit) {
        int ch = static_cast<unsigned char>(text[1 + bit / 6]);
        if ((ch - 63) & (1 << (5 - bit % 6)))
            throw MalformedGraph6("nonzero padding bits in graph6 string");
    }
    return Graph::from_edge_list(n, pairs);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw TooLarge("graph6 emission limited to 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<uint8_t> groups((nbits + 5) / 6, 0);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) groups[bit / 6] |= static_cast<uint8_t>(1 << (5 - bit % 6));
    for (uint8_t grp : groups) out.push_back(static_cast<char>(grp + 63));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw InvalidParams("edge list must start with \"n m\"");
    if (n < 0 || m < 0) throw InvalidParams("negative counts in edge list header");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw InvalidParams("expected " + std::to_string(m) + " edges, got " +
                                std::to_string(i));
        pairs.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, pairs);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

} // namespace cactus
