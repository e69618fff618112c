#include "cactus/canonical.hpp"

#include <algorithm>

namespace cactus {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {

// Backtracking search for the lexicographically minimal sequence of
// adjacency rows. Row i holds the bits from placed vertex i to placed
// vertices 0..i-1, most significant bit first, so comparing rows level by
// level equals comparing the flattened bit string.
struct MinLabelSearch {
    const Graph& g;
    int n;
    std::vector<int> target_degree;     // sorted ascending
    std::vector<Vertex> placed;
    std::vector<char> used;
    std::vector<uint16_t> rows;
    std::vector<uint16_t> best;
    bool have_best = false;

    explicit MinLabelSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), used(graph.vertex_count(), 0) {
        for (Vertex v = 0; v < n; ++v) target_degree.push_back(g.degree(v));
        std::sort(target_degree.begin(), target_degree.end());
        placed.reserve(n);
        rows.reserve(n);
    }

    uint16_t row_bits(Vertex v) const {
        uint16_t bits = 0;
        int level = static_cast<int>(placed.size());
        for (int k = 0; k < level; ++k)
            if (g.has_edge(v, placed[k])) bits |= static_cast<uint16_t>(1u << (level - 1 - k));
        return bits;
    }

    // <0 when rows is a strictly smaller prefix of best, 0 equal, >0 greater.
    int compare_prefix() const {
        if (!have_best) return -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] != best[i]) return rows[i] < best[i] ? -1 : 1;
        }
        return 0;
    }

    void dfs() {
        int level = static_cast<int>(placed.size());
        if (level == n) {
            if (compare_prefix() < 0 || !have_best) {
                best = rows;
                have_best = true;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != target_degree[level]) continue;
            placed.push_back(v);
            rows.push_back(row_bits(v));
            if (compare_prefix() <= 0) {
                used[v] = 1;
                dfs();
                used[v] = 0;
            }
            rows.pop_back();
            placed.pop_back();
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n)
        throw TooLarge("canonical form limited to " + std::to_string(max_n) + " vertices");

    MinLabelSearch search(g);
    if (g.vertex_count() > 0) search.dfs();

    CanonicalForm form;
    form.bytes.push_back(static_cast<uint8_t>(g.vertex_count()));
    for (int d : search.target_degree) form.bytes.push_back(static_cast<uint8_t>(d));
    uint8_t acc = 0;
    int filled = 0;
    for (size_t i = 0; i < search.best.size(); ++i) {
        int width = static_cast<int>(i);
        for (int k = width - 1; k >= 0; --k) {
            acc = static_cast<uint8_t>((acc << 1) | ((search.best[i] >> k) & 1u));
            if (++filled == 8) {
                form.bytes.push_back(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) form.bytes.push_back(static_cast<uint8_t>(acc << (8 - filled)));
    return form;
}

} // namespace cactus
