#include "corona/fuzz.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "corona/families.hpp"
#include "corona/json_io.hpp"
#include "corona/rng.hpp"
#include "corona/version.hpp"

namespace corona {

using nlohmann::json;

namespace {

int catalog_index(TheoremId id) {
    const auto& cat = theorem_catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (cat[i].id == id) return static_cast<int>(i);
    throw std::logic_error("unknown theorem id");
}

Graph connected_gnp(int n, double p, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = gnp_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    return random_tree(n, rng);  // p >= 0.3 and n <= 8 make this unreachable
}

double pick_density(Rng& rng) {
    constexpr double kChoices[] = {0.3, 0.5, 0.7};
    return kChoices[rng.below(3)];
}

std::vector<Graph> draw_factors(int count, int min_n, int max_n, Rng& rng) {
    std::vector<Graph> factors;
    factors.reserve(count);
    for (int i = 0; i < count; ++i)
        factors.push_back(gnp_graph(rng.between(min_n, max_n), 0.5, rng));
    return factors;
}

/// Per-theorem instance requirements; used both to validate caps up front
/// and to steer the samplers.
struct SamplerNeeds {
    int min_graph;
    int min_product;
    bool nonempty_factors;
};

SamplerNeeds needs(TheoremId id) {
    switch (id) {
        case TheoremId::ChromaticOfProduct: return {2, 2, false};
        case TheoremId::TreeTwoDistance: return {1, 1, false};
        case TheoremId::TreeTwoDistanceUniform: return {1, 1, false};
        case TheoremId::MatchingOfComplete: return {2, 2, false};
        case TheoremId::KnTwoDistanceUpper: return {2, 3, true};
        case TheoremId::KnTwoDistanceUniformExact: return {2, 3, true};
        case TheoremId::GeneralTwoDistanceBounds: return {1, 1, false};
        case TheoremId::DiameterOfProduct: return {1, 1, false};
        case TheoremId::KnThreeDistance: return {2, 2, false};
        case TheoremId::KmnThreeDistance: return {2, 2, false};
        case TheoremId::DominatingSetCharacterization: return {2, 3, true};
        case TheoremId::DominationEqualsVertexCover: return {2, 3, true};
        case TheoremId::IndependenceSum: return {2, 3, true};
    }
    throw std::logic_error("unknown theorem id");
}

/// Draws one instance satisfying the theorem's hypotheses (up to the product
/// size cap, which is checked by the caller and logged, not resampled).
Instance draw_instance(TheoremId id, const FuzzConfig& cfg, Rng& rng) {
    const int g_max = cfg.max_graph_vertices;
    const int f_max = cfg.max_factor_vertices;
    switch (id) {
        case TheoremId::ChromaticOfProduct:
        case TheoremId::DiameterOfProduct: {
            const int lo = id == TheoremId::ChromaticOfProduct ? 2 : 1;
            const int n = rng.between(lo, g_max);
            const double p = pick_density(rng);
            Graph g = connected_gnp(n, p, rng);
            return {g, draw_factors(g.edge_count(), 0, f_max, rng)};
        }
        case TheoremId::DominationEqualsVertexCover:
        case TheoremId::IndependenceSum: {
            const int n = rng.between(2, g_max);
            const double p = pick_density(rng);
            Graph g = connected_gnp(n, p, rng);
            return {g, draw_factors(g.edge_count(), 1, f_max, rng)};
        }
        case TheoremId::DominatingSetCharacterization: {
            const int n = rng.between(2, std::min(g_max, 4));
            const double p = pick_density(rng);
            Graph g = connected_gnp(n, p, rng);
            return {g, draw_factors(g.edge_count(), 1, std::min(f_max, 2), rng)};
        }
        case TheoremId::TreeTwoDistance: {
            Graph g = random_tree(rng.between(1, g_max), rng);
            return {g, draw_factors(g.edge_count(), 0, f_max, rng)};
        }
        case TheoremId::TreeTwoDistanceUniform: {
            Graph g = random_tree(rng.between(1, g_max), rng);
            const Graph h = gnp_graph(rng.between(0, f_max), 0.5, rng);
            return {g, std::vector<Graph>(g.edge_count(), h)};
        }
        case TheoremId::MatchingOfComplete: {
            Graph g = standard_family(family::Complete{rng.between(2, g_max)});
            return {g, std::vector<Graph>(g.edge_count(), Graph())};
        }
        case TheoremId::KnTwoDistanceUpper: {
            Graph g = standard_family(family::Complete{rng.between(2, g_max)});
            return {g, draw_factors(g.edge_count(), 1, f_max, rng)};
        }
        case TheoremId::KnTwoDistanceUniformExact: {
            Graph g = standard_family(family::Complete{rng.between(2, g_max)});
            const Graph h = gnp_graph(rng.between(1, f_max), 0.5, rng);
            return {g, std::vector<Graph>(g.edge_count(), h)};
        }
        case TheoremId::GeneralTwoDistanceBounds: {
            const int n = rng.between(1, g_max);
            const double p = pick_density(rng);
            Graph g = gnp_graph(n, p, rng);
            return {g, draw_factors(g.edge_count(), 0, f_max, rng)};
        }
        case TheoremId::KnThreeDistance: {
            Graph g = standard_family(family::Complete{rng.between(2, g_max)});
            return {g, draw_factors(g.edge_count(), 0, f_max, rng)};
        }
        case TheoremId::KmnThreeDistance: {
            const int a = rng.between(1, g_max - 1);
            const int b = rng.between(1, g_max - a);
            Graph g = standard_family(family::CompleteBipartite{a, b});
            return {g, draw_factors(g.edge_count(), 0, f_max, rng)};
        }
    }
    throw std::logic_error("unknown theorem id");
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json make_record(int trial, const TheoremInfo& info, const Instance& inst,
                 const Verdict& verdict, long long elapsed_ms) {
    json record{{"type", "record"},
                {"trial", trial},
                {"theorem", std::string(info.key)},
                {"instance", instance_to_json(inst)},
                {"verdict", verdict_to_json(verdict)},
                {"nodes_explored", verdict.nodes_explored},
                {"elapsed_ms", elapsed_ms}};
    record["prediction"] = verdict.prediction ? prediction_to_json(*verdict.prediction) : json();
    record["observed"] = verdict.observed ? json(*verdict.observed) : json();
    return record;
}

}  // namespace

Report run_fuzz_campaign(const FuzzConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.max_graph_vertices < 1 || cfg.max_factor_vertices < 1 ||
        cfg.max_product_vertices < 1)
        throw std::invalid_argument("size caps must be positive");
    if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");

    std::vector<TheoremId> selected = cfg.theorems;
    if (selected.empty())
        for (const TheoremInfo& t : theorem_catalog()) selected.push_back(t.id);

    for (TheoremId id : selected) {
        const SamplerNeeds need = needs(id);
        const auto& info = theorem_info(id);
        if (cfg.max_graph_vertices < need.min_graph)
            throw std::invalid_argument(std::string(info.key) + ": max graph size " +
                                        std::to_string(cfg.max_graph_vertices) +
                                        " admits no valid instance");
        if (cfg.max_product_vertices < need.min_product)
            throw std::invalid_argument(std::string(info.key) + ": max product size " +
                                        std::to_string(cfg.max_product_vertices) +
                                        " admits no valid instance");
    }

    // One record per (trial, theorem); trials are independent and seeded
    // per cell, so any execution order yields the same records.
    std::vector<std::vector<json>> cells(cfg.trials);
    std::atomic<int> next_trial{0};
    auto worker = [&]() {
        while (true) {
            const int trial = next_trial.fetch_add(1);
            if (trial >= cfg.trials) break;
            std::vector<json>& out = cells[trial];
            for (TheoremId id : selected) {
                const TheoremInfo& info = theorem_info(id);
                Rng rng(mix_seed(mix_seed(cfg.master_seed, trial), catalog_index(id)));
                const Instance inst = draw_instance(id, cfg, rng);

                const long long product_vertices =
                    inst.g.vertex_count() +
                    [&] {
                        long long s = 0;
                        for (const Graph& h : inst.factors) s += h.vertex_count();
                        return s;
                    }();

                Verdict verdict;
                long long elapsed = 0;
                if (product_vertices > cfg.max_product_vertices) {
                    verdict.kind = VerdictKind::Inconclusive;
                    verdict.reason = InconclusiveReason::HypothesisViolation;
                    verdict.detail = "size-cap: product has " + std::to_string(product_vertices) +
                                     " vertices, cap is " +
                                     std::to_string(cfg.max_product_vertices);
                } else {
                    const auto start = std::chrono::steady_clock::now();
                    verdict = verify(id, inst, cfg.budget);
                    elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
                }
                out.push_back(make_record(trial, info, inst, verdict,
                                          cfg.include_timing ? elapsed : 0));
            }
        }
    };

    if (cfg.threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Report report;
    report.header = json{{"type", "header"},
                         {"tool", kToolName},
                         {"version", kToolVersion},
                         {"timestamp", timestamp_utc()},
                         {"config", fuzz_config_to_json(cfg)}};
    for (auto& cell : cells) {
        for (auto& record : cell) {
            const std::string kind = record.at("verdict").at("kind").get<std::string>();
            if (kind == "holds") ++report.holds;
            else if (kind == "refuted") ++report.refuted;
            else ++report.inconclusive;
            report.records.push_back(std::move(record));
        }
    }
    report.footer = json{{"type", "footer"},
                         {"holds", report.holds},
                         {"refuted", report.refuted},
                         {"inconclusive", report.inconclusive}};
    return report;
}

void Report::write(std::ostream& out) const {
    out << header.dump() << "\n";
    for (const json& record : records) out << record.dump() << "\n";
    out << footer.dump() << "\n";
}

FuzzConfig fuzz_config_from_json(const json& j) {
    FuzzConfig cfg;
    if (j.contains("seed")) cfg.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("theorems")) {
        for (const auto& key : j.at("theorems")) {
            const auto id = theorem_from_key(key.get<std::string>());
            if (!id)
                throw std::invalid_argument("unknown theorem \"" + key.get<std::string>() + "\"");
            cfg.theorems.push_back(*id);
        }
    }
    if (j.contains("max_graph_vertices"))
        cfg.max_graph_vertices = j.at("max_graph_vertices").get<int>();
    if (j.contains("max_factor_vertices"))
        cfg.max_factor_vertices = j.at("max_factor_vertices").get<int>();
    if (j.contains("max_product_vertices"))
        cfg.max_product_vertices = j.at("max_product_vertices").get<int>();
    std::optional<std::int64_t> nodes;
    std::optional<std::chrono::milliseconds> wall;
    if (j.contains("budget_nodes") && !j.at("budget_nodes").is_null())
        nodes = j.at("budget_nodes").get<std::int64_t>();
    if (j.contains("budget_ms") && !j.at("budget_ms").is_null())
        wall = std::chrono::milliseconds(j.at("budget_ms").get<std::int64_t>());
    if (nodes || wall) cfg.budget = Budget(nodes, wall);
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("include_timing")) cfg.include_timing = j.at("include_timing").get<bool>();
    return cfg;
}

json fuzz_config_to_json(const FuzzConfig& cfg) {
    json theorems = json::array();
    const std::vector<TheoremId>& ids = cfg.theorems;
    if (ids.empty()) {
        for (const TheoremInfo& t : theorem_catalog()) theorems.push_back(std::string(t.key));
    } else {
        for (TheoremId id : ids) theorems.push_back(std::string(theorem_info(id).key));
    }
    return json{{"seed", cfg.master_seed},
                {"trials", cfg.trials},
                {"theorems", theorems},
                {"max_graph_vertices", cfg.max_graph_vertices},
                {"max_factor_vertices", cfg.max_factor_vertices},
                {"max_product_vertices", cfg.max_product_vertices},
                {"budget_nodes", cfg.budget.max_nodes ? json(*cfg.budget.max_nodes) : json()},
                {"budget_ms",
                 cfg.budget.max_time ? json(cfg.budget.max_time->count()) : json()},
                {"threads", cfg.threads},
                {"include_timing", cfg.include_timing}};
}

}  // namespace corona
