#include "cactus/verify.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "cactus/invariants.hpp"
#include "cactus/io.hpp"

#include "json.hpp"

namespace cactus {

using ordered_json = nlohmann::ordered_json;

int64_t lemma1_wiener_path(int n) {
    if (n < 1) throw InvalidParams("path Wiener formula needs n >= 1");
    return static_cast<int64_t>(n) * (n + 1) * (n - 1) / 6;
}

int64_t lemma1_wiener_cycle(int n) {
    if (n < 3) throw InvalidParams("cycle Wiener formula needs n >= 3");
    int64_t nn = n;
    return n % 2 == 1 ? nn * (nn * nn - 1) / 8 : nn * nn * nn / 8;
}

int64_t theorem1_lower_bound(int n, int t) {
    if (t < 0 || n < 2 * t + 1) throw InvalidParams("lower bound needs n >= 2t+1, t >= 0");
    int64_t nn = n, tt = t;
    int64_t numerator = nn * nn + (4 * tt - 3) * nn + 6 * tt * tt - 14 * tt + 2;
    if (numerator % 2 != 0)
        throw Error("lower-bound formula is not integral at n=" + std::to_string(n) +
                    ", t=" + std::to_string(t));
    return numerator / 2;
}

int64_t theorem2_upper_bound(int n, int t) {
    if (t < 0 || n < 2 * t + 1) throw InvalidParams("upper bound needs n >= 2t+1, t >= 0");
    int64_t nn = n, k = t / 2;
    int64_t numerator;
    if (t % 2 == 0) {
        numerator = nn * nn * nn - 3 * nn * nn + 2 * nn + 6 * k * nn * nn - 24 * k * k * nn +
                    8 * k * k * k + 48 * k * k - 20 * k;
    } else {
        numerator = nn * nn * nn + 6 * k * nn * nn - (24 * k * k + 24 * k + 13) * nn +
                    8 * k * k * k + 60 * k * k + 70 * k + 30;
    }
    if (numerator % 6 != 0)
        throw Error("upper-bound formula is not integral at n=" + std::to_string(n) +
                    ", t=" + std::to_string(t));
    return numerator / 6;
}

DiscrepancyLedger builtin_discrepancy_ledger() {
    return {
        {"T1_FORMULA_MISMATCH", -1, -1, 2,
         "printed constant term 3t^2-7t+1 exceeds the bundle value by 3t(t-1)/2 for t >= 2"},
        {"MAX_NOT_UNIQUE", 5, 1, 0, "C_5 ties Sw(0,1;2) at W_e = 15"},
        {"CLAIM1_VIOLATION", 5, 1, 0, "the tied maximizer C_5 has a cycle of length 5"},
        {"CLAIM3_VIOLATION", 5, 1, 0, "the tied maximizer C_5 has no pendant path"},
        {"CLAIM5_VIOLATION", 5, 1, 0, "the tied maximizer C_5 is not a saw graph"},
        {"CLAIM4_VIOLATION", -1, -1, 3,
         "a saw triangle carrying two cut vertices yields two walks between them, so "
         "balanced saws with a chain section of length >= 2 exceed one internal path"},
    };
}

DiscrepancyLedger load_discrepancy_ledger(std::istream& in) {
    ordered_json doc = ordered_json::parse(in);
    DiscrepancyLedger ledger;
    for (const auto& entry : doc.at("known_discrepancies")) {
        KnownDiscrepancy k;
        k.code = entry.at("code").get<std::string>();
        k.n = entry.value("n", -1);
        k.t = entry.value("t", -1);
        k.min_t = entry.value("min_t", 0);
        k.note = entry.value("note", std::string{});
        ledger.push_back(std::move(k));
    }
    return ledger;
}

bool ledger_covers(const DiscrepancyLedger& ledger, CactusClassParams cell,
                   const std::string& code) {
    for (const auto& k : ledger) {
        if (k.code != code) continue;
        if (k.n != -1 && k.n != cell.n) continue;
        if (k.t != -1 && k.t != cell.t) continue;
        if (cell.t < k.min_t) continue;
        return true;
    }
    return false;
}

namespace {

bool contains_form(const std::vector<Graph>& graphs, const CanonicalForm& form) {
    return std::any_of(graphs.begin(), graphs.end(),
                       [&](const Graph& g) { return canonical_form(g) == form; });
}

int leaf_count(const Graph& g) {
    int leaves = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) ++leaves;
    return leaves;
}

bool all_cycles_are_triangles(const Graph& g) {
    for (const auto& block : block_decomposition(g).blocks)
        if (block.size() > 1 && block.size() != 3) return false;
    return true;
}

} // namespace

std::vector<Discrepancy> verify_structural_claims(const EnumerationCell& cell,
                                                  const ExtremalScan& scan) {
    std::vector<Discrepancy> found;
    int n = cell.params.n;
    int t = cell.params.t;
    if (t < 1 || n < 5) return found;

    CanonicalForm saw_form = canonical_form(saw(t / 2, t - t / 2, n));
    for (const Graph& g : scan.max_graphs) {
        std::string witness = emit_graph6(g);
        if (!all_cycles_are_triangles(g))
            found.push_back({"CLAIM1_VIOLATION", witness, "maximizer has a cycle longer than 3"});
        if (!is_chain_cactus(g))
            found.push_back({"CLAIM2_VIOLATION", witness, "maximizer is not a chain cactus"});
        int expected_pendant_paths = t == 1 ? 1 : 0;
        if (leaf_count(g) != expected_pendant_paths)
            found.push_back({"CLAIM3_VIOLATION", witness,
                             "maximizer has " + std::to_string(leaf_count(g)) +
                                 " pendant paths, expected " +
                                 std::to_string(expected_pendant_paths)});
        if (t >= 2 && internal_paths(g).size() > 1)
            found.push_back({"CLAIM4_VIOLATION", witness,
                             "maximizer has " + std::to_string(internal_paths(g).size()) +
                                 " internal paths"});
        if (canonical_form(g) != saw_form)
            found.push_back({"CLAIM5_VIOLATION", witness, "maximizer is not the balanced saw"});
    }
    return found;
}

VerificationReport verify_cell(CactusClassParams params, const DiscrepancyLedger& ledger,
                               int max_n) {
    EnumerationCell cell = enumerate_cacti(params, max_n);
    ExtremalScan scan = extremal_scan(cell);

    VerificationReport report(params);
    report.count = cell.count();
    report.oracle_min = scan.min_value;
    report.oracle_max = scan.max_value;
    report.theorem2_in_domain = params.n >= 5;
    report.min_unique = scan.min_graphs.size() == 1;
    report.max_unique = scan.max_graphs.size() == 1;
    for (const Graph& g : scan.min_graphs) report.min_witnesses.push_back(emit_graph6(g));
    for (const Graph& g : scan.max_graphs) report.max_witnesses.push_back(emit_graph6(g));

    auto add = [&](std::string code, std::string witness, std::string note) {
        report.discrepancies.push_back(
            {std::move(code), std::move(witness), std::move(note), false});
    };

    Graph bundle_graph = bundle(params);
    report.min_attained_by_bundle =
        contains_form(scan.min_graphs, canonical_form(bundle_graph));
    if (!report.min_attained_by_bundle)
        add("MIN_NOT_BUNDLE", report.min_witnesses.front(),
            "enumerated minimum is not the bundle");
    if (!report.min_unique)
        add("MIN_NOT_UNIQUE", report.min_witnesses.back(),
            std::to_string(scan.min_graphs.size()) + " graphs attain the minimum");

    try {
        report.theorem1_value = theorem1_lower_bound(params.n, params.t);
        if (*report.theorem1_value != report.oracle_min)
            add("T1_FORMULA_MISMATCH", report.min_witnesses.front(),
                "printed bound " + std::to_string(*report.theorem1_value) +
                    " vs enumerated minimum " + std::to_string(report.oracle_min));
    } catch (const Error& e) {
        add("T1_NONINTEGRAL", "", e.what());
    }

    Graph saw_graph = saw(params.t / 2, params.t - params.t / 2, params.n);
    int64_t saw_value = edge_wiener(saw_graph);
    report.theorem2_value = theorem2_upper_bound(params.n, params.t);
    report.max_attained_by_saw = contains_form(scan.max_graphs, canonical_form(saw_graph));
    if (report.theorem2_in_domain) {
        if (!report.max_attained_by_saw)
            add("MAX_NOT_SAW", report.max_witnesses.front(),
                "enumerated maximum is not the balanced saw");
        if (!report.max_unique)
            add("MAX_NOT_UNIQUE", report.max_witnesses.front(),
                std::to_string(scan.max_graphs.size()) + " graphs attain the maximum");
        if (*report.theorem2_value != saw_value)
            add("T2_FORMULA_MISMATCH", emit_graph6(saw_graph),
                "closed form " + std::to_string(*report.theorem2_value) + " vs saw value " +
                    std::to_string(saw_value));
        for (Discrepancy& d : verify_structural_claims(cell, scan))
            report.discrepancies.push_back(std::move(d));
    }

    for (Discrepancy& d : report.discrepancies)
        d.known = ledger_covers(ledger, params, d.code);
    return report;
}

BoundsSweep run_bounds_sweep(int max_n, uint64_t seed, const DiscrepancyLedger& ledger) {
    BoundsSweep sweep;
    sweep.max_n = max_n;
    sweep.seed = seed;
    for (int n = 3; n <= max_n; ++n) {
        for (int t = 0; 2 * t + 1 <= n; ++t) {
            sweep.cells.push_back(verify_cell(CactusClassParams(n, t), ledger, max_n));
            for (const Discrepancy& d : sweep.cells.back().discrepancies)
                if (!d.known) ++sweep.new_discrepancies;
        }
    }
    return sweep;
}

std::string bounds_sweep_csv(const BoundsSweep& sweep) {
    std::ostringstream out;
    out << "n,t,count,oracle_min,oracle_max,theorem1_value,theorem2_value,"
           "theorem2_in_domain,min_attained_by_bundle,max_attained_by_saw,"
           "min_unique,max_unique,discrepancies\n";
    for (const auto& cell : sweep.cells) {
        out << cell.cell.n << ',' << cell.cell.t << ',' << cell.count << ',' << cell.oracle_min
            << ',' << cell.oracle_max << ',';
        if (cell.theorem1_value) out << *cell.theorem1_value;
        out << ',';
        if (cell.theorem2_value) out << *cell.theorem2_value;
        out << ',' << int(cell.theorem2_in_domain) << ',' << int(cell.min_attained_by_bundle)
            << ',' << int(cell.max_attained_by_saw) << ',' << int(cell.min_unique) << ','
            << int(cell.max_unique) << ',';
        for (size_t i = 0; i < cell.discrepancies.size(); ++i) {
            if (i) out << ';';
            out << cell.discrepancies[i].code << (cell.discrepancies[i].known ? ":known" : ":new");
        }
        out << '\n';
    }
    return out.str();
}

std::string bounds_sweep_json(const BoundsSweep& sweep) {
    ordered_json doc;
    doc["max_n"] = sweep.max_n;
    doc["seed"] = sweep.seed;
    doc["new_discrepancies"] = sweep.new_discrepancies;
    doc["cells"] = ordered_json::array();
    for (const auto& cell : sweep.cells) {
        ordered_json c;
        c["n"] = cell.cell.n;
        c["t"] = cell.cell.t;
        c["count"] = cell.count;
        c["oracle_min"] = cell.oracle_min;
        c["oracle_max"] = cell.oracle_max;
        if (cell.theorem1_value) c["theorem1_value"] = *cell.theorem1_value;
        if (cell.theorem2_value) c["theorem2_value"] = *cell.theorem2_value;
        c["theorem2_in_domain"] = cell.theorem2_in_domain;
        c["min_attained_by_bundle"] = cell.min_attained_by_bundle;
        c["max_attained_by_saw"] = cell.max_attained_by_saw;
        c["min_unique"] = cell.min_unique;
        c["max_unique"] = cell.max_unique;
        c["min_witnesses"] = cell.min_witnesses;
        c["max_witnesses"] = cell.max_witnesses;
        c["discrepancies"] = ordered_json::array();
        for (const auto& d : cell.discrepancies) {
            ordered_json dj;
            dj["code"] = d.code;
            dj["witness"] = d.witness;
            dj["note"] = d.note;
            dj["known"] = d.known;
            c["discrepancies"].push_back(std::move(dj));
        }
        doc["cells"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

std::string render_report_text(const std::string& json_text) {
    ordered_json doc = ordered_json::parse(json_text);
    std::ostringstream out;
    out << "bounds sweep: max_n=" << doc.at("max_n").get<int>()
        << " seed=" << doc.at("seed").get<uint64_t>()
        << " new_discrepancies=" << doc.at("new_discrepancies").get<int>() << "\n";
    for (const auto& c : doc.at("cells")) {
        out << "cell n=" << c.at("n").get<int>() << " t=" << c.at("t").get<int>()
            << ": count=" << c.at("count").get<int>()
            << " We_min=" << c.at("oracle_min").get<int64_t>()
            << " We_max=" << c.at("oracle_max").get<int64_t>();
        if (c.contains("theorem1_value"))
            out << " T1=" << c.at("theorem1_value").get<int64_t>();
        if (c.contains("theorem2_value"))
            out << " T2=" << c.at("theorem2_value").get<int64_t>();
        out << (c.at("min_attained_by_bundle").get<bool>() ? " min:bundle" : " min:OTHER")
            << (c.at("max_attained_by_saw").get<bool>() ? " max:saw" : " max:other");
        if (!c.at("theorem2_in_domain").get<bool>()) out << " (below theorem-2 domain)";
        out << "\n";
        for (const auto& d : c.at("discrepancies")) {
            out << "  [" << (d.at("known").get<bool>() ? "known" : "NEW") << "] "
                << d.at("code").get<std::string>() << " witness="
                << d.at("witness").get<std::string>() << " " << d.at("note").get<std::string>()
                << "\n";
        }
    }
    return out.str();
}

} // namespace cactus
