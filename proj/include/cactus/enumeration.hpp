#ifndef CACTUS_ENUMERATION_HPP
#define CACTUS_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "cactus/canonical.hpp"
#include "cactus/constructors.hpp"
#include "cactus/graph.hpp"

namespace cactus {

inline constexpr int kDefaultEnumerationCap = 11;
inline constexpr int kFilterOracleCap = 7;

// All non-isomorphic members of one class G_{n,t}, in canonical-form order.
struct EnumerationCell {
    CactusClassParams params;
    std::vector<Graph> graphs;

    int count() const { return static_cast<int>(graphs.size()); }
};

// Grows cacti by attaching a terminal block (pendant edge or fresh cycle)
// at every vertex of every smaller cactus, deduplicating canonical forms.
// Throws TooLarge beyond max_n.
EnumerationCell enumerate_cacti(CactusClassParams params, int max_n = kDefaultEnumerationCap);

// Independent cross-check: scans every labeled graph on n vertices with
// n-1+t edges, keeps connected cacti with t cycles, dedups canonically.
// Only feasible for n <= 7.
EnumerationCell filter_oracle(CactusClassParams params);

struct ExtremalScan {
    int64_t min_value = 0;
    int64_t max_value = 0;
    std::vector<Graph> min_graphs;
    std::vector<Graph> max_graphs;
};

// Exact edge-Wiener extremes over a cell, with every attaining graph.
ExtremalScan extremal_scan(const EnumerationCell& cell);

} // namespace cactus

#endif // CACTUS_ENUMERATION_HPP
