#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "corona/families.hpp"
#include "corona/rng.hpp"
#include "corona/solvers.hpp"
#include "oracles.hpp"

using namespace corona;

namespace {

const Budget kBig = Budget::nodes(50'000'000);

Graph petersen() {
    return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

int color_count(const ExactResult& r) {
    const auto& col = std::get<KColoring>(r.witness).colors;
    return static_cast<int>(std::set<int>(col.begin(), col.end()).size());
}

}  // namespace

TEST_CASE("budget validation") {
    CHECK_THROWS_AS(Budget(std::nullopt, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(Budget(0, std::nullopt), std::invalid_argument);
    CHECK_NOTHROW(Budget::wall(std::chrono::milliseconds(100)));
}

TEST_CASE("chromatic_number on landmarks") {
    CHECK(chromatic_number(standard_family(family::Complete{5}), kBig).value == 5);
    CHECK(chromatic_number(standard_family(family::Cycle{5}), kBig).value == 3);

    const Graph pet = petersen();
    CHECK_FALSE(oracle::k_colorable(pet, 1, 2));  // exhaustive 2-colorability refutation
    const ExactResult r = chromatic_number(pet, kBig);
    CHECK(r.value == 3);
    CHECK(r.exact);
    CHECK(check_certificate(pet, r.witness));
    CHECK(color_count(r) == 3);
}

TEST_CASE("k-distance chromatic") {
    const Graph p4 = standard_family(family::Path{4});
    CHECK(oracle::k_distance_chromatic(p4, 2) == 3);  // brute force over all colorings
    const ExactResult r = k_distance_chromatic(p4, 2, kBig);
    CHECK(r.value == 3);
    CHECK(check_certificate(p4, r.witness));
    CHECK(std::get<KColoring>(r.witness).k == 2);

    CHECK(k_distance_chromatic(standard_family(family::Star{3}), 2, kBig).value == 4);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = gnp_graph(rng.between(1, 7), 0.4, rng);
        CHECK(k_distance_chromatic(g, 1, kBig).value == chromatic_number(g, kBig).value);
    }

    CHECK_THROWS_AS(k_distance_chromatic(p4, 0, kBig), std::invalid_argument);
}

TEST_CASE("chromatic seed clique is validated and used") {
    const Graph k4 = standard_family(family::Complete{4});
    const std::vector<int> good{0, 1, 2, 3};
    CHECK(chromatic_number(k4, kBig, good).value == 4);
    const std::vector<int> bad{0, 1};
    CHECK_THROWS_AS(chromatic_number(standard_family(family::Empty{3}), kBig, bad),
                    std::invalid_argument);
}

TEST_CASE("independence_number") {
    for (int n = 1; n <= 6; ++n)
        CHECK(independence_number(standard_family(family::Complete{n}), kBig).value == 1);
    CHECK(independence_number(standard_family(family::Cycle{5}), kBig).value == 2);

    const Graph p4 = standard_family(family::Path{4});
    CHECK(oracle::independence(p4) == 2);  // subset enumeration
    const ExactResult r = independence_number(p4, kBig);
    CHECK(r.value == 2);
    CHECK(check_certificate(p4, r.witness));
}

TEST_CASE("vertex_cover_number via Gallai") {
    CHECK(vertex_cover_number(standard_family(family::Star{4}), kBig).value == 1);
    CHECK(vertex_cover_number(standard_family(family::Cycle{5}), kBig).value == 3);
    CHECK(vertex_cover_number(standard_family(family::Path{4}), kBig).value ==
          oracle::vertex_cover(standard_family(family::Path{4})));
}

TEST_CASE("domination_number") {
    for (int n = 2; n <= 6; ++n)
        CHECK(domination_number(standard_family(family::Complete{n}), kBig).value == 1);
    CHECK(domination_number(standard_family(family::Path{3}), kBig).value == 1);

    const Graph c4 = standard_family(family::Cycle{4});
    // No single vertex dominates C4; {0, 2} does.
    for (int v = 0; v < 4; ++v) CHECK_FALSE(check_certificate(c4, DominatingSet{{v}}));
    CHECK(check_certificate(c4, DominatingSet{{0, 2}}));
    CHECK(domination_number(c4, kBig).value == 2);

    // An isolated vertex must be picked by every dominating set.
    const Graph lonely = build_graph(3, {{0, 1}});
    CHECK(domination_number(lonely, kBig).value == 2);
}

TEST_CASE("matching_number") {
    CHECK(matching_number(standard_family(family::Complete{4}), kBig).value == 2);
    CHECK(matching_number(standard_family(family::Complete{5}), kBig).value == 2);
    CHECK(matching_number(standard_family(family::Path{4}), kBig).value == 2);

    const Graph c7 = standard_family(family::Cycle{7});
    const ExactResult r = matching_number(c7, kBig);
    CHECK(r.value == 3);  // floor(7/2) met by an explicit matching
    CHECK(std::get<Matching>(r.witness).edges.size() == 3);
    CHECK(check_certificate(c7, r.witness));
}

TEST_CASE("check_certificate accepts and rejects from the definitions") {
    const Graph c4 = standard_family(family::Cycle{4});
    CHECK(check_certificate(c4, DominatingSet{{0, 2}}));

    const Graph p3 = standard_family(family::Path{3});
    CHECK_FALSE(check_certificate(p3, KColoring{2, {0, 0, 1}}));
    CHECK(check_certificate(p3, KColoring{2, {0, 1, 2}}));
    CHECK(check_certificate(p3, KColoring{1, {0, 1, 0}}));

    const Graph k3 = standard_family(family::Complete{3});
    CHECK_FALSE(check_certificate(k3, IndependentSet{{0, 1}}));
    CHECK(check_certificate(k3, IndependentSet{{2}}));

    // Dangling references are rejections, not false.
    CHECK_THROWS_AS(check_certificate(k3, IndependentSet{{5}}), std::invalid_argument);
    CHECK_THROWS_AS(check_certificate(k3, KColoring{1, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(check_certificate(p3, Matching{{{0, 2}}}), std::invalid_argument);
    CHECK_FALSE(check_certificate(p3, Matching{{{0, 1}, {1, 2}}}));
}

TEST_CASE("forced timeout returns a certified bracket") {
    // C5 x C5-ish blow-up where greedy bounds do not close the gap.
    const Graph g = power_graph(standard_family(family::Cycle{9}), 2);
    const ExactResult r = chromatic_number(g, Budget::nodes(1));
    if (!r.exact) {
        CHECK(r.lower <= r.upper);
        const int truth = oracle::chromatic(g);
        CHECK(r.lower <= truth);
        CHECK(truth <= r.upper);
        CHECK(check_certificate(g, r.witness));
    }

    const Graph c4 = standard_family(family::Cycle{4});
    const ExactResult d = domination_number(c4, Budget::nodes(1));
    CHECK(d.lower <= 2);
    CHECK(2 <= d.upper);
    CHECK(check_certificate(c4, d.witness));
}

TEST_CASE("Gallai identity and sandwich bounds on a random corpus") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = gnp_graph(rng.between(1, 8), 0.45, rng);
        const int n = g.vertex_count();

        const ExactResult alpha = independence_number(g, kBig);
        const ExactResult beta = vertex_cover_number(g, kBig);
        CHECK(alpha.value + beta.value == n);

        const ExactResult chi = chromatic_number(g, kBig);
        CHECK(chi.value <= g.max_degree() + 1);
        CHECK(alpha.value * (g.max_degree() + 1) >= n);

        // gamma <= beta needs connectivity and no isolated vertices.
        if (n >= 2 && is_connected(g)) {
            const ExactResult gamma = domination_number(g, kBig);
            CHECK(gamma.value <= beta.value);
        }
    }
}

TEST_CASE("relabeling invariance of all six values") {
    Rng rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = gnp_graph(rng.between(2, 7), 0.5, rng);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        const Graph h = oracle::permute(g, perm);

        CHECK(chromatic_number(g, kBig).value == chromatic_number(h, kBig).value);
        CHECK(k_distance_chromatic(g, 2, kBig).value == k_distance_chromatic(h, 2, kBig).value);
        CHECK(independence_number(g, kBig).value == independence_number(h, kBig).value);
        CHECK(vertex_cover_number(g, kBig).value == vertex_cover_number(h, kBig).value);
        CHECK(domination_number(g, kBig).value == domination_number(h, kBig).value);
        CHECK(matching_number(g, kBig).value == matching_number(h, kBig).value);
    }
}

TEST_CASE("solver values equal brute force on graphs up to 8 vertices") {
    Rng rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = gnp_graph(rng.between(1, 8), 0.5, rng);
        CHECK(chromatic_number(g, kBig).value == oracle::chromatic(g));
        CHECK(k_distance_chromatic(g, 2, kBig).value == oracle::k_distance_chromatic(g, 2));
        CHECK(independence_number(g, kBig).value == oracle::independence(g));
        CHECK(vertex_cover_number(g, kBig).value == oracle::vertex_cover(g));
        CHECK(domination_number(g, kBig).value == oracle::domination(g));
        CHECK(matching_number(g, kBig).value == oracle::matching(g));
    }
}

TEST_CASE("chromatic search stays optimal under incumbent updates mid-branch") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = gnp_graph(rng.between(6, 10), 0.6, rng);
        const ExactResult r = chromatic_number(g, kBig);
        CHECK(r.value == oracle::chromatic(g));
        CHECK(check_certificate(g, r.witness));
    }
}

TEST_CASE("k-distance monotonicity and saturation") {
    Rng rng(15);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = gnp_graph(rng.between(1, 7), 0.4, rng);
        int prev = 0;
        for (int k = 1; k <= 4; ++k) {
            const int cur = k_distance_chromatic(g, k, kBig).value;
            CHECK(prev <= cur);
            prev = cur;
        }
        const MetricSummary ms = metric_summary(g);
        if (ms.connected)
            CHECK(k_distance_chromatic(g, std::max(1, *ms.diameter), kBig).value ==
                  g.vertex_count());
    }
}

TEST_CASE("solvers accept empty and edgeless graphs") {
    const Graph e0 = standard_family(family::Empty{0});
    CHECK(chromatic_number(e0, kBig).value == 0);
    CHECK(independence_number(e0, kBig).value == 0);
    CHECK(domination_number(e0, kBig).value == 0);
    CHECK(matching_number(e0, kBig).value == 0);

    const Graph e3 = standard_family(family::Empty{3});
    CHECK(chromatic_number(e3, kBig).value == 1);
    CHECK(independence_number(e3, kBig).value == 3);
    CHECK(domination_number(e3, kBig).value == 3);
    CHECK(matching_number(e3, kBig).value == 0);
}
