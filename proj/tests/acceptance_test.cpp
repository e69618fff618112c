// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion prints its wall time so the runtime budgets stay visible.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "cactus/canonical.hpp"
#include "cactus/constructors.hpp"
#include "cactus/enumeration.hpp"
#include "cactus/invariants.hpp"
#include "cactus/random.hpp"
#include "cactus/transforms.hpp"
#include "cactus/verify.hpp"

using namespace cactus;

namespace {

int failures = 0;
int current_criterion_failures = 0;

#define ACCEPT_CHECK(cond, detail)                                                      \
    do {                                                                                \
        if (!(cond)) {                                                                  \
            ++current_criterion_failures;                                               \
            std::cout << "    check failed: " << detail << " at " << __FILE__ << ":"    \
                      << __LINE__ << "\n";                                              \
        }                                                                               \
    } while (0)

class Criterion {
public:
    Criterion(int number, std::string label)
        : number_(number), label_(std::move(label)), start_(clock::now()) {
        current_criterion_failures = 0;
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_);
        bool ok = current_criterion_failures == 0;
        if (!ok) failures += current_criterion_failures;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": " << label_
                  << " (" << ms.count() << " ms)\n";
    }

private:
    using clock = std::chrono::steady_clock;
    int number_;
    std::string label_;
    clock::time_point start_;
};

std::set<CanonicalForm> form_set(const EnumerationCell& cell) {
    std::set<CanonicalForm> forms;
    for (const Graph& g : cell.graphs) forms.insert(canonical_form(g));
    return forms;
}

bool attained_by(const std::vector<Graph>& graphs, const Graph& candidate) {
    CanonicalForm form = canonical_form(candidate);
    for (const Graph& g : graphs)
        if (canonical_form(g) == form) return true;
    return false;
}

void criterion1() {
    Criterion c(1, "closed forms for W(P_n) and W(C_n), n in [3,60]");
    for (int n = 3; n <= 60; ++n) {
        ACCEPT_CHECK(wiener(path(n)) == lemma1_wiener_path(n), "W(P_" << n << ")");
        ACCEPT_CHECK(wiener(cycle(n)) == lemma1_wiener_cycle(n), "W(C_" << n << ")");
    }
}

void criterion2() {
    Criterion c(2, "W_e(C_n) = W(C_n) and W_e(P_n) = W(P_{n-1}), n in [3,60]");
    for (int n = 3; n <= 60; ++n) {
        ACCEPT_CHECK(edge_wiener(cycle(n)) == wiener(cycle(n)), "W_e(C_" << n << ")");
        ACCEPT_CHECK(edge_wiener(path(n)) == wiener(path(n - 1)), "W_e(P_" << n << ")");
    }
}

void criterion3() {
    Criterion c(3, "coalescence identity on 200 seeded random pairs (n_i <= 8)");
    SplitMix64 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g1 = random_connected_graph(rng, rng.in_range(2, 8), rng.below(4));
        Graph g2 = random_connected_graph(rng, rng.in_range(2, 8), rng.below(4));
        Vertex u1 = rng.below(g1.vertex_count());
        Vertex u2 = rng.below(g2.vertex_count());
        int64_t direct = edge_wiener(coalesce(g1, u1, g2, u2).graph);
        ACCEPT_CHECK(coalescence_edge_wiener(g1, u1, g2, u2) == direct,
                     "pair " << trial << " decomposition vs direct");
    }
}

void criterion4() {
    Criterion c(4, "transformation suites: 200 seeded instances per lemma");
    auto rows = run_all_lemma_suites(0, 200);
    ACCEPT_CHECK(rows.size() == 9, "suite count");
    for (const auto& row : rows) {
        ACCEPT_CHECK(row.instances == 200, lemma_name(row.lemma) << " instance count");
        ACCEPT_CHECK(row.holds == row.instances,
                     lemma_name(row.lemma) << " claimed relation: " << row.holds << "/"
                                           << row.instances);
        ACCEPT_CHECK(row.delta_mismatches == 0, lemma_name(row.lemma) << " exact deltas");
        if (row.lemma == LemmaId::L7 || row.lemma == LemmaId::L12)
            ACCEPT_CHECK(row.delta_checked == row.instances,
                         lemma_name(row.lemma) << " delta coverage");
        if (row.lemma == LemmaId::L8)
            ACCEPT_CHECK(row.delta_checked == 50, "L8 l=4 delta coverage");
        if (row.lemma == LemmaId::L4_5) {
            // The even and odd consolidation cases each need 100 instances.
            ACCEPT_CHECK(row.even_cycle_cases >= 100, "even-cycle consolidation coverage");
            ACCEPT_CHECK(row.odd_cycle_cases >= 100, "odd-cycle consolidation coverage");
        }
    }
}

void criterion5() {
    Criterion c(5, "enumeration equals the exhaustive filter oracle for n <= 7");
    for (int n = 1; n <= 7; ++n) {
        for (int t = 0; 2 * t + 1 <= n; ++t) {
            CactusClassParams params(n, t);
            auto generated = enumerate_cacti(params);
            auto filtered = filter_oracle(params);
            ACCEPT_CHECK(form_set(generated) == form_set(filtered),
                         "cell (" << n << "," << t << ") set equality");
            for (const Graph& g : generated.graphs)
                ACCEPT_CHECK(g.edge_count() == n - 1 + t,
                             "cell (" << n << "," << t << ") edge identity");
        }
    }
}

void criterion6() {
    Criterion c(6, "extremal attainment and exact saw value, 3 <= n <= 9");
    for (int n = 3; n <= 9; ++n) {
        for (int t = 0; 2 * t + 1 <= n; ++t) {
            CactusClassParams params(n, t);
            auto scan = extremal_scan(enumerate_cacti(params));
            ACCEPT_CHECK(attained_by(scan.min_graphs, bundle(params)),
                         "(" << n << "," << t << ") minimum attained by bundle");
            if (n >= 5) {
                Graph saw_graph = saw(t / 2, t - t / 2, n);
                ACCEPT_CHECK(attained_by(scan.max_graphs, saw_graph),
                             "(" << n << "," << t << ") maximum attained by saw");
                ACCEPT_CHECK(theorem2_upper_bound(n, t) == edge_wiener(saw_graph),
                             "(" << n << "," << t << ") closed form equals saw value");
                ACCEPT_CHECK(theorem2_upper_bound(n, t) == scan.max_value,
                             "(" << n << "," << t << ") closed form equals enumerated max");
            }
        }
    }
}

void criterion7() {
    Criterion c(7, "lower-bound comparison and uniqueness reported under the ledger");
    auto ledger = builtin_discrepancy_ledger();
    auto sweep = run_bounds_sweep(9, 0, ledger);
    for (const auto& cell : sweep.cells) {
        int t = cell.cell.t;
        bool t1_matches = cell.theorem1_value && *cell.theorem1_value == cell.oracle_min;
        if (t <= 1) {
            ACCEPT_CHECK(t1_matches, "(" << cell.cell.n << "," << t
                                         << ") printed lower bound must match for t <= 1");
        } else {
            // Match or ledgered mismatch with a witness; nothing silent.
            bool recorded = false;
            for (const auto& d : cell.discrepancies) {
                if (d.code == "T1_FORMULA_MISMATCH") {
                    recorded = true;
                    ACCEPT_CHECK(d.known, "(" << cell.cell.n << "," << t
                                              << ") lower-bound gap must be ledgered");
                    ACCEPT_CHECK(!d.witness.empty(),
                                 "(" << cell.cell.n << "," << t << ") witness present");
                }
            }
            ACCEPT_CHECK(t1_matches != recorded,
                         "(" << cell.cell.n << "," << t << ") comparison recorded");
        }
        for (const auto& d : cell.discrepancies)
            ACCEPT_CHECK(d.known, "(" << cell.cell.n << "," << t << ") " << d.code
                                      << " outside the shipped ledger");
    }
    ACCEPT_CHECK(sweep.new_discrepancies == 0, "no unledgered discrepancies");
}

void criterion8() {
    Criterion c(8, "verify-bounds --max-n 9 --seed 0 is byte-deterministic");
    auto ledger = builtin_discrepancy_ledger();
    auto first = run_bounds_sweep(9, 0, ledger);
    auto second = run_bounds_sweep(9, 0, ledger);
    ACCEPT_CHECK(bounds_sweep_csv(first) == bounds_sweep_csv(second), "CSV bytes");
    ACCEPT_CHECK(bounds_sweep_json(first) == bounds_sweep_json(second), "JSON bytes");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures > 0) {
        std::cout << failures << " acceptance check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
