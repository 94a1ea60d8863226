#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "corona/fuzz.hpp"
#include "corona/json_io.hpp"

using namespace corona;
using nlohmann::json;

namespace {

std::string record_bytes(const Report& report) {
    std::string all;
    for (const auto& r : report.records) all += r.dump() + "\n";
    return all;
}

}  // namespace

TEST_CASE("identical config and seed give byte-identical records") {
    FuzzConfig cfg;
    cfg.master_seed = 7;
    cfg.trials = 1;
    cfg.theorems = {TheoremId::IndependenceSum};
    cfg.max_graph_vertices = 4;
    cfg.max_factor_vertices = 2;
    cfg.max_product_vertices = 20;
    cfg.budget = Budget::nodes(1'000'000);

    const Report a = run_fuzz_campaign(cfg);
    const Report b = run_fuzz_campaign(cfg);
    CHECK(a.records.size() == 1);
    CHECK(record_bytes(a) == record_bytes(b));
    CHECK(!record_bytes(a).empty());
}

TEST_CASE("record count is trials x selected theorems, with skips logged") {
    FuzzConfig cfg;
    cfg.master_seed = 3;
    cfg.trials = 5;
    cfg.theorems = {TheoremId::KnTwoDistanceUpper, TheoremId::TreeTwoDistance};
    cfg.max_graph_vertices = 6;
    cfg.max_factor_vertices = 3;
    cfg.max_product_vertices = 10;  // tight enough to force some skips
    cfg.budget = Budget::nodes(1'000'000);

    const Report report = run_fuzz_campaign(cfg);
    CHECK(report.records.size() == 10);
    CHECK(report.holds + report.refuted + report.inconclusive == 10);
    CHECK(report.footer.at("holds") == report.holds);
}

TEST_CASE("dominating-set characterization campaign yields only holds or inconclusive") {
    FuzzConfig cfg;
    cfg.master_seed = 11;
    cfg.trials = 10;
    cfg.theorems = {TheoremId::DominatingSetCharacterization};
    cfg.max_graph_vertices = 4;
    cfg.max_factor_vertices = 2;
    cfg.max_product_vertices = 16;
    cfg.budget = Budget::nodes(5'000'000);

    const Report report = run_fuzz_campaign(cfg);
    CHECK(report.records.size() == 10);
    CHECK(report.refuted == 0);
    for (const auto& record : report.records) {
        const std::string kind = record.at("verdict").at("kind").get<std::string>();
        CHECK((kind == "holds" || kind == "inconclusive"));
    }
}

TEST_CASE("invalid configurations are rejected before any trial") {
    FuzzConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_fuzz_campaign(cfg), std::invalid_argument);

    cfg.trials = 1;
    cfg.max_product_vertices = 0;
    CHECK_THROWS_AS(run_fuzz_campaign(cfg), std::invalid_argument);

    // Caps that admit no valid instance for a selected theorem.
    cfg.max_product_vertices = 2;
    cfg.theorems = {TheoremId::DominationEqualsVertexCover};
    CHECK_THROWS_WITH_AS(run_fuzz_campaign(cfg),
                         doctest::Contains("admits no valid instance"), std::invalid_argument);

    cfg.theorems = {TheoremId::ChromaticOfProduct};
    cfg.max_graph_vertices = 1;
    cfg.max_product_vertices = 20;
    CHECK_THROWS_AS(run_fuzz_campaign(cfg), std::invalid_argument);
}

TEST_CASE("report structure and config echo round-trip") {
    FuzzConfig cfg;
    cfg.master_seed = 5;
    cfg.trials = 2;
    cfg.theorems = {TheoremId::KnThreeDistance};
    cfg.max_graph_vertices = 4;
    cfg.max_factor_vertices = 2;
    cfg.max_product_vertices = 30;
    cfg.budget = Budget::nodes(2'000'000);

    const Report report = run_fuzz_campaign(cfg);
    CHECK(report.header.at("type") == "header");
    CHECK(report.header.at("tool") == "coronalab");
    CHECK(report.footer.at("type") == "footer");

    const FuzzConfig echoed = fuzz_config_from_json(report.header.at("config"));
    CHECK(echoed.master_seed == cfg.master_seed);
    CHECK(echoed.trials == cfg.trials);
    CHECK(echoed.theorems == cfg.theorems);
    CHECK(echoed.budget.max_nodes == cfg.budget.max_nodes);
    CHECK_FALSE(echoed.budget.max_time.has_value());
    CHECK(record_bytes(run_fuzz_campaign(echoed)) == record_bytes(report));

    std::ostringstream stream;
    report.write(stream);
    const std::string text = stream.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 2);  // header + 2 records + footer
}
