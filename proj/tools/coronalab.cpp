#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "corona/corona.hpp"
#include "corona/edge_list.hpp"
#include "corona/families.hpp"
#include "corona/fuzz.hpp"
#include "corona/json_io.hpp"
#include "corona/solvers.hpp"
#include "corona/theorems.hpp"
#include "corona/version.hpp"

namespace {

using namespace corona;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    try {
        return parse_edge_list(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << text;
}

struct BudgetFlags {
    std::int64_t nodes = 50'000'000;
    std::int64_t ms = 0;  // 0 means no wall limit

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-nodes", nodes, "Search node limit")->check(CLI::PositiveNumber);
        cmd->add_option("--budget-ms", ms, "Wall-clock limit in milliseconds");
    }

    Budget to_budget() const {
        return Budget(nodes, ms > 0 ? std::optional(std::chrono::milliseconds(ms)) : std::nullopt);
    }
};

struct FactorFlags {
    std::vector<std::string> factor_paths;
    std::string uniform_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--factor", factor_paths, "Factor graph file, one per edge of G");
        cmd->add_option("--uniform-factor", uniform_path, "One factor graph used for every edge");
    }

    std::vector<Graph> load(const Graph& g) const {
        if (!factor_paths.empty() && !uniform_path.empty())
            throw std::runtime_error("--factor and --uniform-factor are mutually exclusive");
        if (!uniform_path.empty())
            return std::vector<Graph>(g.edge_count(), load_graph(uniform_path));
        std::vector<Graph> factors;
        for (const std::string& p : factor_paths) factors.push_back(load_graph(p));
        if (factors.empty()) factors.assign(g.edge_count(), Graph());
        return factors;
    }
};

int run(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + " " + kToolVersion +
                 " - edge corona products, exact invariants, and claim checking"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a standard graph as edge-list text");
    std::string family_text, gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", family_text,
                    "complete:N | bipartite:M:N | path:N | cycle:N | star:K | empty:N | "
                    "tree:N[:SEED] | gnp:N:P[:SEED]")
        ->required();
    gen->add_option("--seed", gen_seed, "Seed for random families");
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    // product
    auto* product = app.add_subcommand("product", "Build a generalized edge corona product");
    std::string product_graph, product_out, product_dot;
    FactorFlags product_factors;
    product->add_option("--graph", product_graph, "Base graph G edge-list file")->required();
    product_factors.attach(product);
    product->add_option("-o,--out", product_out, "Output file (default stdout)");
    product->add_option("--dot", product_dot, "Also write a Graphviz DOT rendering here");

    // solve
    auto* solve = app.add_subcommand("solve", "Run an exact invariant solver");
    std::string invariant, solve_graph;
    BudgetFlags solve_budget;
    solve->add_option("--invariant", invariant,
                      "chromatic | kdist:<k> | independence | vertex-cover | domination | "
                      "matching")
        ->required();
    solve->add_option("--graph", solve_graph, "Graph edge-list file")->required();
    solve_budget.attach(solve);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check one catalog claim on one instance");
    std::string theorem_key, verify_graph;
    FactorFlags verify_factors;
    BudgetFlags verify_budget;
    verify_cmd->add_option("--theorem", theorem_key, "Theorem key (see `theorems`)")->required();
    verify_cmd->add_option("--graph", verify_graph, "Base graph G edge-list file")->required();
    verify_factors.attach(verify_cmd);
    verify_budget.attach(verify_cmd);

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "Run a seeded verification campaign");
    std::string fuzz_config_path, fuzz_out;
    std::uint64_t fuzz_seed = 0;
    int fuzz_trials = 0;
    std::vector<std::string> fuzz_theorems;
    int fuzz_max_n = 0, fuzz_max_factor = 0, fuzz_max_product = 0, fuzz_threads = 0;
    std::int64_t fuzz_nodes = 0, fuzz_ms = 0;
    bool fuzz_timing = false;
    fuzz->add_option("--config", fuzz_config_path, "JSON config file");
    fuzz->add_option("--seed", fuzz_seed, "Master seed");
    fuzz->add_option("--trials", fuzz_trials, "Number of trials");
    fuzz->add_option("--theorems", fuzz_theorems, "Theorem keys (comma separated or repeated)")
        ->delimiter(',');
    fuzz->add_option("--max-n", fuzz_max_n, "Cap on |V(G)|");
    fuzz->add_option("--max-factor-n", fuzz_max_factor, "Cap on factor vertices");
    fuzz->add_option("--max-product", fuzz_max_product, "Cap on product vertices");
    fuzz->add_option("--budget-nodes", fuzz_nodes, "Per-verify node budget");
    fuzz->add_option("--budget-ms", fuzz_ms, "Per-verify wall budget (breaks reproducibility)");
    fuzz->add_option("--threads", fuzz_threads, "Worker threads");
    fuzz->add_flag("--timing", fuzz_timing, "Record real elapsed_ms (breaks reproducibility)");
    fuzz->add_option("-o,--out", fuzz_out, "Output file (default stdout)");

    // theorems
    app.add_subcommand("theorems", "List the claim catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) {
        const FamilySpec spec = parse_family_spec(family_text, gen_seed);
        write_output(gen_out, render_edge_list(standard_family(spec)));
        return kExitOk;
    }

    if (product->parsed()) {
        const Graph g = load_graph(product_graph);
        const CoronaGraph cg = generalized_edge_corona(g, product_factors.load(g));
        write_output(product_out, render_edge_list(cg.graph()));
        if (!product_dot.empty()) write_output(product_dot, to_dot(cg));
        return kExitOk;
    }

    if (solve->parsed()) {
        const Graph g = load_graph(solve_graph);
        const Budget budget = solve_budget.to_budget();
        ExactResult result;
        if (invariant == "chromatic") result = chromatic_number(g, budget);
        else if (invariant.rfind("kdist:", 0) == 0)
            result = k_distance_chromatic(g, std::stoi(invariant.substr(6)), budget);
        else if (invariant == "independence") result = independence_number(g, budget);
        else if (invariant == "vertex-cover") result = vertex_cover_number(g, budget);
        else if (invariant == "domination") result = domination_number(g, budget);
        else if (invariant == "matching") result = matching_number(g, budget);
        else throw std::runtime_error("unknown invariant \"" + invariant + "\"");
        std::cout << exact_result_to_json(result, invariant).dump() << "\n";
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        const auto id = theorem_from_key(theorem_key);
        if (!id) throw std::runtime_error("unknown theorem \"" + theorem_key + "\"");
        const Graph g = load_graph(verify_graph);
        const Instance inst{g, verify_factors.load(g)};
        const Verdict verdict = verify(*id, inst, verify_budget.to_budget());
        json out = verdict_to_json(verdict);
        out["theorem"] = theorem_key;
        std::cout << out.dump() << "\n";
        return verdict.kind == VerdictKind::Refuted ? kExitRefuted : kExitOk;
    }

    if (fuzz->parsed()) {
        FuzzConfig cfg;
        if (!fuzz_config_path.empty())
            cfg = fuzz_config_from_json(json::parse(read_file(fuzz_config_path)));
        if (fuzz->count("--seed")) cfg.master_seed = fuzz_seed;
        if (fuzz->count("--trials")) cfg.trials = fuzz_trials;
        if (!fuzz_theorems.empty()) {
            cfg.theorems.clear();
            for (const std::string& key : fuzz_theorems) {
                const auto id = theorem_from_key(key);
                if (!id) throw std::runtime_error("unknown theorem \"" + key + "\"");
                cfg.theorems.push_back(*id);
            }
        }
        if (fuzz->count("--max-n")) cfg.max_graph_vertices = fuzz_max_n;
        if (fuzz->count("--max-factor-n")) cfg.max_factor_vertices = fuzz_max_factor;
        if (fuzz->count("--max-product")) cfg.max_product_vertices = fuzz_max_product;
        if (fuzz->count("--budget-nodes") || fuzz->count("--budget-ms"))
            cfg.budget = Budget(fuzz->count("--budget-nodes") ? std::optional(fuzz_nodes)
                                                              : std::nullopt,
                                fuzz->count("--budget-ms")
                                    ? std::optional(std::chrono::milliseconds(fuzz_ms))
                                    : std::nullopt);
        if (fuzz->count("--threads")) cfg.threads = fuzz_threads;
        if (fuzz_timing) cfg.include_timing = true;

        const Report report = run_fuzz_campaign(cfg);
        std::ostringstream text;
        report.write(text);
        write_output(fuzz_out, text.str());
        return report.refuted > 0 ? kExitRefuted : kExitOk;
    }

    // theorems
    json catalog = json::array();
    for (const TheoremInfo& t : theorem_catalog()) {
        catalog.push_back({{"key", std::string(t.key)},
                           {"statement", std::string(t.statement)},
                           {"hypotheses", std::string(t.hypotheses)},
                           {"relation", relation_name(t.relation)}});
    }
    std::cout << catalog.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
