#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "corona/edge_list.hpp"
#include "corona/families.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CORONALAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("coronalab-test-" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_graph_file(const std::string& name, const corona::Graph& g) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << corona::render_edge_list(g);
    return p.string();
}

std::string file_path(const std::string& name) { return (scratch_dir() / name).string(); }

}  // namespace

using namespace corona;

TEST_CASE("gen writes edge-list text") {
    const RunResult r = run("gen --family complete:4");
    CHECK(r.exit_code == 0);
    const Graph g = parse_edge_list(r.out);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
}

TEST_CASE("product pipeline produces the closed-form header") {
    const std::string p3 = write_graph_file("p3.txt", standard_family(family::Path{3}));
    const std::string k2 = write_graph_file("k2.txt", standard_family(family::Complete{2}));

    const RunResult r =
        run("product --graph " + p3 + " --factor " + k2 + " --factor " + k2);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("7 12\n", 0) == 0);

    const RunResult uniform = run("product --graph " + p3 + " --uniform-factor " + k2);
    CHECK(uniform.out == r.out);

    const RunResult dot = run("product --graph " + p3 + " --uniform-factor " + k2 +
                              " -o " + file_path("prod.txt") + " --dot " + file_path("prod.dot"));
    CHECK(dot.exit_code == 0);
    std::ifstream dotfile(file_path("prod.dot"));
    std::string first_line;
    std::getline(dotfile, first_line);
    CHECK(first_line == "graph corona {");
}

TEST_CASE("solve emits a single JSON object with value and witness") {
    const std::string c4 = write_graph_file("c4.txt", standard_family(family::Cycle{4}));
    const RunResult r = run("solve --invariant domination --graph " + c4);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("value") == 2);
    CHECK(j.at("status") == "exact");
    CHECK(j.at("witness").at("type") == "dominating-set");

    const RunResult kdist = run("solve --invariant kdist:2 --graph " + c4);
    CHECK(json::parse(kdist.out).at("value") == 4);
}

TEST_CASE("verify reports holds and exits 0") {
    const std::string c3 = write_graph_file("c3.txt", standard_family(family::Cycle{3}));
    const std::string k2 = write_graph_file("k2b.txt", standard_family(family::Complete{2}));
    const RunResult r =
        run("verify --theorem independence-sum --graph " + c3 + " --uniform-factor " + k2);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("kind") == "holds");
    CHECK(j.at("observed") == 3);
    CHECK(j.at("prediction").at("value") == 3);
}

TEST_CASE("verify exits 1 on a refutation and the embedded instance replays") {
    // Zero-vertex factors defeat the domination identity; the CLI surfaces
    // that as exit code 1 with a replayable witness instance.
    const std::string c6 = write_graph_file("c6.txt", standard_family(family::Cycle{6}));
    const RunResult r = run("verify --theorem domination-equals-vertex-cover --graph " + c6);
    CHECK(r.exit_code == 1);
    const json j = json::parse(r.out);
    CHECK(j.at("kind") == "refuted");

    // Replay: write the embedded instance back to files and verify again.
    const Graph g = parse_edge_list(j.at("witness_instance").at("graph").get<std::string>());
    const std::string replay_graph = write_graph_file("replay.txt", g);
    std::string factor_args;
    for (const auto& f : j.at("witness_instance").at("factors")) {
        static int k = 0;
        const std::string p = write_graph_file("replay_f" + std::to_string(k++) + ".txt",
                                               parse_edge_list(f.get<std::string>()));
        factor_args += " --factor " + p;
    }
    const RunResult again =
        run("verify --theorem domination-equals-vertex-cover --graph " + replay_graph +
            factor_args);
    CHECK(again.exit_code == 1);
    CHECK(json::parse(again.out).at("kind") == "refuted");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("solve --invariant nonsense --graph /dev/null").exit_code == 2);
    CHECK(run("verify --theorem no-such-claim --graph /dev/null").exit_code == 2);
    const std::string bad = file_path("bad.txt");
    std::ofstream(bad) << "1 2 3\n";
    CHECK(run("solve --invariant chromatic --graph " + bad).exit_code == 2);
}

TEST_CASE("theorems lists the catalog") {
    const RunResult r = run("theorems");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.size() == 13);
    CHECK(j[0].contains("key"));
    CHECK(j[0].contains("statement"));
}

TEST_CASE("fuzz campaigns are byte-reproducible and exit by refutation count") {
    const std::string flags =
        "fuzz --seed 7 --trials 2 --theorems independence-sum,kn-three-distance "
        "--max-n 4 --max-factor-n 2 --max-product 30 --budget-nodes 2000000";
    const RunResult a = run(flags);
    const RunResult b = run(flags);
    CHECK(a.exit_code == 0);

    auto records_of = [](const std::string& text) {
        std::vector<std::string> records;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            if (line.find("\"type\":\"record\"") != std::string::npos) records.push_back(line);
        return records;
    };
    const auto ra = records_of(a.out);
    CHECK(ra.size() == 4);  // trials x selected theorems
    CHECK(ra == records_of(b.out));

    // Config file route agrees with inline flags.
    const std::string cfg_path = file_path("fuzz.json");
    std::ofstream(cfg_path) << json{{"seed", 7},
                                    {"trials", 2},
                                    {"theorems", {"independence-sum", "kn-three-distance"}},
                                    {"max_graph_vertices", 4},
                                    {"max_factor_vertices", 2},
                                    {"max_product_vertices", 30},
                                    {"budget_nodes", 2000000}}
                                .dump();
    const RunResult c = run("fuzz --config " + cfg_path);
    CHECK(records_of(c.out) == ra);

    CHECK(run("fuzz --trials 0").exit_code == 2);
}
