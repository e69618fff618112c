#ifndef CACTUS_CANONICAL_HPP
#define CACTUS_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

// Isomorphism-invariant byte string: vertex count, sorted degree sequence,
// then the lexicographically minimal packed adjacency triangle over all
// degree-respecting vertex orderings. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    std::vector<uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    std::string hex() const;
};

inline constexpr int kDefaultCanonicalBound = 12;

// Exhaustive minimum-adjacency-string search with degree and prefix pruning.
// Throws TooLarge when vertex_count exceeds max_n.
CanonicalForm canonical_form(const Graph& g, int max_n = kDefaultCanonicalBound);

} // namespace cactus

#endif // CACTUS_CANONICAL_HPP
