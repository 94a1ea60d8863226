#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <vector>

#include "corona/solvers.hpp"
#include "corona/theorems.hpp"

namespace corona {

/// Configuration of a seeded verification campaign. Trial i derives its
/// generator seed from (master_seed, i), so records do not depend on
/// execution order or thread count.
struct FuzzConfig {
    std::uint64_t master_seed = 0;
    int trials = 1;
    std::vector<TheoremId> theorems;  // empty selects the whole catalog
    int max_graph_vertices = 6;
    int max_factor_vertices = 3;
    int max_product_vertices = 60;
    Budget budget = Budget::nodes(5'000'000);
    int threads = 1;
    /// Real per-record timings are nondeterministic; they are emitted as 0
    /// unless this is set, keeping reports byte-reproducible by default.
    bool include_timing = false;
};

/// JSON Lines report: one header object, one record object per
/// (trial, theorem), one footer object with the verdict tallies. Trials that
/// violate a cap or a hypothesis still produce a record (an inconclusive
/// one), so the record count is always trials x selected theorems.
struct Report {
    nlohmann::json header;
    std::vector<nlohmann::json> records;
    nlohmann::json footer;

    int holds = 0;
    int refuted = 0;
    int inconclusive = 0;

    void write(std::ostream& out) const;
};

/// Runs the campaign. Throws std::invalid_argument on an invalid
/// configuration (trials < 1, nonpositive caps, or caps that admit no valid
/// instance for a selected theorem) before any trial runs.
Report run_fuzz_campaign(const FuzzConfig& cfg);

FuzzConfig fuzz_config_from_json(const nlohmann::json& j);
nlohmann::json fuzz_config_to_json(const FuzzConfig& cfg);

}  // namespace corona
