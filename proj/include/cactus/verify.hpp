#ifndef CACTUS_VERIFY_HPP
#define CACTUS_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cactus/enumeration.hpp"

namespace cactus {

// Closed forms for the Wiener index of paths and cycles.
int64_t lemma1_wiener_path(int n);
int64_t lemma1_wiener_cycle(int n);

// Printed lower bound for W_e over G_{n,t}:
//   n^2/2 + (2t - 3/2)n + 3t^2 - 7t + 1.
// Evaluated exactly; known to overshoot the bundle value for t >= 2 (the
// sweep records that as a ledgered discrepancy rather than trusting either
// side silently).
int64_t theorem1_lower_bound(int n, int t);

// Exact closed form of the saw-graph edge-Wiener value, i.e. the upper
// bound attained by Sw(floor(t/2), ceil(t/2); n-2t-1). The even case is the
// printed one; the odd case carries +4k^3/3 where the print has -4k^3/3
// (the printed version is non-integral at (n,t) = (7,3)).
int64_t theorem2_upper_bound(int n, int t);

struct Discrepancy {
    std::string code;
    std::string witness; // graph6 of the offending graph
    std::string note;
    bool known = false; // covered by the shipped ledger
};

// A ledger entry whitelists one discrepancy code on a cell range:
// n / t of -1 match anything, min_t filters t >= min_t.
struct KnownDiscrepancy {
    std::string code;
    int n = -1;
    int t = -1;
    int min_t = 0;
    std::string note;
};

using DiscrepancyLedger = std::vector<KnownDiscrepancy>;

// The entries shipped with the repository (data/known_discrepancies.json
// holds the same content for external tooling).
DiscrepancyLedger builtin_discrepancy_ledger();
DiscrepancyLedger load_discrepancy_ledger(std::istream& in);
bool ledger_covers(const DiscrepancyLedger& ledger, CactusClassParams cell,
                   const std::string& code);

struct VerificationReport {
    explicit VerificationReport(CactusClassParams params) : cell(params) {}

    CactusClassParams cell;
    int count = 0;
    int64_t oracle_min = 0;
    int64_t oracle_max = 0;
    std::optional<int64_t> theorem1_value;
    std::optional<int64_t> theorem2_value;
    bool theorem2_in_domain = false; // n >= 5
    bool min_attained_by_bundle = false;
    bool max_attained_by_saw = false;
    bool min_unique = false;
    bool max_unique = false;
    std::vector<std::string> min_witnesses; // graph6 of every argmin
    std::vector<std::string> max_witnesses;
    std::vector<Discrepancy> discrepancies;
};

// Enumerates the cell, scans extremes, compares against the constructions
// and the closed forms, and runs the structural claims on every maximizer.
// Nothing is dropped: every mismatch lands in discrepancies, flagged known or
// new against the ledger.
VerificationReport verify_cell(CactusClassParams params, const DiscrepancyLedger& ledger,
                               int max_n = kDefaultEnumerationCap);

// Structural predicates for the maximizers of a cell (all cycles are
// triangles, chain cactus, pendant-path count, at most one internal path,
// balanced saw shape). Used by verify_cell; exposed for direct testing.
std::vector<Discrepancy> verify_structural_claims(const EnumerationCell& cell,
                                                  const ExtremalScan& scan);

struct BoundsSweep {
    int max_n = 0;
    uint64_t seed = 0;
    std::vector<VerificationReport> cells;
    int new_discrepancies = 0;
};

// Every cell with 3 <= n <= max_n, 0 <= t <= (n-1)/2, in (n, t) order.
BoundsSweep run_bounds_sweep(int max_n, uint64_t seed, const DiscrepancyLedger& ledger);

// Byte-deterministic renderings (identical runs give identical bytes).
std::string bounds_sweep_csv(const BoundsSweep& sweep);
std::string bounds_sweep_json(const BoundsSweep& sweep);

// Human-readable summary of a JSON report produced by bounds_sweep_json.
std::string render_report_text(const std::string& json_text);

} // namespace cactus

#endif // CACTUS_VERIFY_HPP
