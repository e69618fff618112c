#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cactus/constructors.hpp"
#include "cactus/enumeration.hpp"
#include "cactus/invariants.hpp"
#include "cactus/io.hpp"
#include "cactus/transforms.hpp"
#include "cactus/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    std::string input_path;
    int n = -1;
    int t = -1;
    std::string family;
    std::string params;
    std::string format = "text";
    uint64_t seed = 0;
    int max_n = -1;
    std::string out;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoi(item));
    }
    return values;
}

int default_max_n(int fallback) {
    if (const char* env = std::getenv("CACTUS_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

std::string read_file(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw cactus::InvalidParams("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cactus::InvalidParams("cannot open output file: " + path);
    out << content;
}

cactus::Graph read_graph(const std::string& text) {
    // Edge-list files start with the "n m" header; anything else is graph6.
    std::istringstream probe(text);
    int a = 0, b = 0;
    if (probe >> a >> b) {
        std::istringstream in(text);
        return cactus::parse_edge_list(in);
    }
    std::string line = text;
    size_t eol = line.find('\n');
    if (eol != std::string::npos) line = line.substr(0, eol);
    return cactus::parse_graph6(line);
}

void emit_graph(const cactus::Graph& g, const std::string& format, std::ostream& out) {
    if (format == "graph6") {
        out << cactus::emit_graph6(g) << "\n";
    } else if (format == "text") {
        out << cactus::emit_edge_list(g);
    } else if (format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = g.vertex_count();
        doc["edges"] = nlohmann::ordered_json::array();
        for (const cactus::Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
        out << doc.dump(2) << "\n";
    } else {
        throw cactus::InvalidParams("unsupported graph output format: " + format);
    }
}

cactus::DiscrepancyLedger load_ledger() {
    std::ifstream in("data/known_discrepancies.json");
    if (in) return cactus::load_discrepancy_ledger(in);
    return cactus::builtin_discrepancy_ledger();
}

int cmd_compute(const RunConfig& cfg) {
    cactus::Graph g = read_graph(read_file(cfg.input_path));
    if (!cactus::is_connected(g)) {
        std::cerr << "graph is disconnected\n";
        return kExitUsage;
    }
    int64_t w = cactus::wiener(g);
    int64_t we = cactus::edge_wiener(g);
    int cycles = -1;
    try {
        cycles = cactus::cactus_cycle_count(g);
    } catch (const cactus::NotCactus&) {
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = g.vertex_count();
        doc["m"] = g.edge_count();
        if (cycles >= 0)
            doc["t"] = cycles;
        else
            doc["t"] = nullptr;
        doc["wiener"] = w;
        doc["edge_wiener"] = we;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << " t=";
        if (cycles >= 0)
            std::cout << cycles;
        else
            std::cout << "not a cactus";
        std::cout << "\n";
        std::cout << "W=" << w << " We=" << we << "\n";
    }
    return kExitOk;
}

int cmd_construct(const RunConfig& cfg) {
    auto params = parse_int_list(cfg.params);
    cactus::Graph g;
    if (cfg.family == "path") {
        g = cactus::path(cfg.n);
    } else if (cfg.family == "cycle") {
        g = cactus::cycle(cfg.n);
    } else if (cfg.family == "star") {
        g = cactus::star(cfg.n);
    } else if (cfg.family == "bundle") {
        g = cactus::bundle(cactus::CactusClassParams(cfg.n, cfg.t));
    } else if (cfg.family == "triangle-chain") {
        if (params.size() != 1) throw cactus::InvalidParams("triangle-chain needs --params i");
        g = cactus::triangle_chain(params[0]);
    } else if (cfg.family == "saw") {
        if (params.size() != 2) throw cactus::InvalidParams("saw needs --params i,j and --n");
        g = cactus::saw(params[0], params[1], cfg.n);
    } else if (cfg.family == "clipped-cycle") {
        if (params.size() != 1) throw cactus::InvalidParams("clipped-cycle needs --params l");
        g = cactus::clipped_cycle(params[0]);
    } else if (cfg.family == "chain") {
        if (params.empty())
            throw cactus::InvalidParams("chain needs --params g1,g2,... block sizes");
        g = cactus::chain_cactus(params);
    } else {
        throw cactus::InvalidParams("unknown family: " + cfg.family);
    }
    std::string format = cfg.format == "text" ? "graph6" : cfg.format;
    if (cfg.out.empty()) {
        emit_graph(g, format, std::cout);
    } else {
        std::ostringstream buf;
        emit_graph(g, format, buf);
        write_file(cfg.out, buf.str());
    }
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
    int cap = cfg.max_n > 0 ? cfg.max_n : default_max_n(cactus::kDefaultEnumerationCap);
    if (cap > cactus::kDefaultEnumerationCap)
        throw cactus::InvalidParams("enumeration cap limited to n <= 11");
    auto cell = cactus::enumerate_cacti(cactus::CactusClassParams(cfg.n, cfg.t), cap);
    std::ostringstream buf;
    for (const cactus::Graph& g : cell.graphs) buf << cactus::emit_graph6(g) << "\n";
    if (cfg.out.empty())
        std::cout << buf.str();
    else
        write_file(cfg.out, buf.str());
    std::cerr << "count " << cell.count() << "\n";
    return kExitOk;
}

int cmd_verify_bounds(const RunConfig& cfg) {
    int max_n = cfg.max_n > 0 ? cfg.max_n : default_max_n(9);
    if (max_n > cactus::kDefaultEnumerationCap)
        throw cactus::InvalidParams("sweep cap limited to n <= 11");
    auto sweep = cactus::run_bounds_sweep(max_n, cfg.seed, load_ledger());
    std::string prefix = cfg.out.empty() ? "bounds_report" : cfg.out;
    std::string json_text = cactus::bounds_sweep_json(sweep);
    write_file(prefix + ".csv", cactus::bounds_sweep_csv(sweep));
    write_file(prefix + ".json", json_text);
    std::cout << cactus::render_report_text(json_text);
    return sweep.new_discrepancies == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_lemmas(const RunConfig& cfg) {
    auto rows = cactus::run_all_lemma_suites(cfg.seed, 200);
    std::string csv = cactus::lemma_suite_csv(rows);
    write_file(cfg.out.empty() ? "lemma_report.csv" : cfg.out, csv);
    bool ok = true;
    for (const auto& row : rows) {
        std::cout << cactus::lemma_name(row.lemma) << ": " << row.holds << "/" << row.instances
                  << " hold";
        if (row.delta_checked > 0)
            std::cout << ", " << row.delta_mismatches << " delta mismatches of "
                      << row.delta_checked;
        std::cout << "\n";
        if (row.holds != row.instances || row.delta_mismatches != 0) ok = false;
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_report(const RunConfig& cfg) {
    std::cout << cactus::render_report_text(read_file(cfg.input_path));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"edge-Wiener index toolkit for cacti"};
    app.add_option("--command", cfg.command,
                   "one of: compute, construct, enumerate, verify-bounds, verify-lemmas, report")
        ->required();
    app.add_option("--input", cfg.input_path, "input file (graph6 or edge list; '-' = stdin)");
    app.add_option("--n", cfg.n, "vertex count");
    app.add_option("--t", cfg.t, "cycle count");
    app.add_option("--family", cfg.family,
                   "construct family: path, cycle, star, bundle, triangle-chain, saw, "
                   "clipped-cycle, chain");
    app.add_option("--params", cfg.params, "family-specific integers, comma separated");
    app.add_option("--format", cfg.format, "output format: text, csv, json, graph6");
    app.add_option("--seed", cfg.seed, "seed for randomized suites (default 0)");
    app.add_option("--max-n", cfg.max_n, "cap override (env CACTUS_MAX_N also honored)");
    app.add_option("--out", cfg.out, "output path (prefix for verify-bounds)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cfg.command == "compute") return cmd_compute(cfg);
        if (cfg.command == "construct") return cmd_construct(cfg);
        if (cfg.command == "enumerate") return cmd_enumerate(cfg);
        if (cfg.command == "verify-bounds") return cmd_verify_bounds(cfg);
        if (cfg.command == "verify-lemmas") return cmd_verify_lemmas(cfg);
        if (cfg.command == "report") return cmd_report(cfg);
        std::cerr << "unknown command: " << cfg.command << "\n";
        return kExitUsage;
    } catch (const cactus::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
