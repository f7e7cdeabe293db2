#include <doctest.h>

#include <algorithm>

#include "ppr/graph.hpp"
#include "ppr/lift.hpp"
#include "ppr/rng.hpp"

using namespace ppr;

namespace {

TwoColoring blown_monochrome(const Graph& blown, Color c) {
    TwoColoring col(blown.order);
    for (auto [u, v] : blown.edges()) col.set(u, v, c);
    return col;
}

// Checks a red lift output directly against the ambient coloring.
bool red_transversal_ok(const LiftResult& res, const std::vector<int>& power_path,
                        const std::vector<std::vector<int>>& members, int k,
                        const TwoColoring& ambient) {
    if (!res.witness) return false;
    const auto& ys = res.witness->vertices;
    if (ys.size() != power_path.size()) return false;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        auto& m = members[power_path[i]];
        if (std::find(m.begin(), m.end(), ys[i]) == m.end()) return false;
        for (std::size_t j = i + 1; j < ys.size() && j <= i + static_cast<std::size_t>(k); ++j) {
            if (j < ys.size() && i + k >= j) {
                auto c = ambient.get(ys[i], ys[j]);
                if (!c || *c != Color::Red) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("majority side on an all-blue blow-up") {
    Graph base = Graph::path(4);
    auto [blown, map] = complete_blowup(base, 6);
    auto coloring = blown_monochrome(blown, Color::Blue);
    auto sel = select_majority_side(map, coloring, 3);
    REQUIRE(sel.has_value());
    CHECK(!sel->swapped);
    CHECK(sel->blue_cliques == 4);
    CHECK(sel->red_cliques == 0);
    CHECK(sel->w == std::vector<int>{0, 1, 2, 3});
    for (int v : sel->w) {
        auto& mc = sel->assignment.cliques[v];
        REQUIRE(mc.has_value());
        CHECK(mc->color == Color::Blue);
        CHECK(mc->vertices.size() == 3);
        for (int x : mc->vertices) CHECK(map.cluster_of(x) == v);
    }
}

TEST_CASE("majority side swaps colors on an all-red blow-up") {
    Graph base = Graph::path(3);
    auto [blown, map] = complete_blowup(base, 6);
    auto coloring = blown_monochrome(blown, Color::Red);
    auto sel = select_majority_side(map, coloring, 3);
    REQUIRE(sel.has_value());
    CHECK(sel->swapped);
    CHECK(sel->red_cliques == 3);
    CHECK(sel->w.size() == 3);
}

TEST_CASE("majority side keeps at least half the clusters") {
    Rng rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        Graph base = Graph::path(5);
        auto [blown, map] = complete_blowup(base, 6);
        TwoColoring c(blown.order);
        for (auto [u, v] : blown.edges())
            c.set(u, v, rnd_unit(rng) < 0.5 ? Color::Blue : Color::Red);
        auto sel = select_majority_side(map, c, 3);
        REQUIRE(sel.has_value());  // cluster size 6 = r(K_3), never fails
        CHECK(2 * sel->w.size() >= 5);
        CHECK(sel->blue_cliques + sel->red_cliques == 5);
    }
}

TEST_CASE("ramsey step failure is reported when clusters are too small") {
    Graph base = Graph::path(2);
    auto [blown, map] = complete_blowup(base, 5);
    // pentagon-pentagram inside each cluster avoids monochromatic triangles
    TwoColoring c(blown.order);
    for (auto [u, v] : blown.edges()) {
        if (map.cluster_of(u) == map.cluster_of(v)) {
            int du = u % 5, dv = v % 5, d = std::abs(du - dv);
            c.set(u, v, (d == 1 || d == 4) ? Color::Blue : Color::Red);
        } else {
            c.set(u, v, Color::Red);
        }
    }
    RamseyStepFailure failure;
    auto sel = select_majority_side(map, c, 3, &failure);
    CHECK(!sel.has_value());
    CHECK(failure.base_vertex == 0);
}

TEST_CASE("dichotomy finds the blue path on an all-blue auxiliary coloring") {
    Graph f = Graph::complete(6);
    Graph fk = graph_power(f, 2);
    TwoColoring chi(6);
    for (auto [u, v] : fk.edges()) chi.set(u, v, Color::Blue);
    auto res = claim_dichotomy(f, 2, 4, chi, fk, BigRat(1, 20), BigRat(6));
    CHECK(res.kind == DichotomyResult::Kind::BluePath);
    CHECK(res.path.size() >= 4);
}

TEST_CASE("dichotomy finds the red power path on an all-red auxiliary coloring") {
    Graph f = Graph::complete(9);
    Graph fk = graph_power(f, 2);
    TwoColoring chi(9);
    for (auto [u, v] : fk.edges()) chi.set(u, v, Color::Red);
    auto res = claim_dichotomy(f, 2, 3, chi, fk, BigRat(1, 20), BigRat(3));
    REQUIRE(res.kind == DichotomyResult::Kind::RedPowerPath);
    CHECK(res.path.size() == 3);
    // consecutive-within-k pairs are edges of f
    for (std::size_t i = 0; i < res.path.size(); ++i)
        for (std::size_t j = i + 1; j < res.path.size() && j <= i + 2; ++j)
            CHECK(f.has_edge(res.path[i], res.path[j]));
}

TEST_CASE("dichotomy reports infeasibility when classes are too small") {
    Graph f = Graph::complete(4);
    Graph fk = graph_power(f, 2);
    TwoColoring chi(4);
    for (auto [u, v] : fk.edges()) chi.set(u, v, Color::Red);
    // threshold ceil(epsilon * a * n) = ceil(1 * 100 * 100) is unreachable
    auto res = claim_dichotomy(f, 2, 100, chi, fk, BigRat(1), BigRat(100));
    CHECK(res.kind == DichotomyResult::Kind::Infeasible);
    CHECK(!res.diagnostics.empty());
}

TEST_CASE("blue lift with s >= 2k produces the long power path") {
    // k = 1, s = 2: base blue path of length 3, cliques of size 4, all blue
    std::vector<std::vector<int>> members{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    TwoColoring ambient(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) ambient.set(u, v, Color::Blue);
    auto res = lift_blue({0, 1, 2}, ambient, members, 2, 1);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->color == Color::Blue);
    CHECK(res.witness->power == 1);
    CHECK(res.witness->vertices.size() == 6);  // 2 k n with k=1, n=3
}

TEST_CASE("blue lift falls back to the block chain when s < 2k") {
    // k = 2, s = 2: t = 3 cliques cannot carry the wide construction
    std::vector<std::vector<int>> members{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    TwoColoring ambient(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) ambient.set(u, v, Color::Blue);
    auto res = lift_blue({0, 1, 2}, ambient, members, 2, 2);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->power == 2);
    CHECK(res.witness->vertices.size() == 6);  // k n with k=2, n=3
    // all within-distance-k pairs blue
    const auto& ys = res.witness->vertices;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size() && j <= i + 2; ++j)
            CHECK(ambient.at(ys[i], ys[j]) == Color::Blue);
}

TEST_CASE("blue lift reports failure honestly when no blue block chain exists") {
    std::vector<std::vector<int>> members{{0, 1, 2}, {3, 4, 5}};
    TwoColoring ambient(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) ambient.set(u, v, Color::Red);
    auto res = lift_blue({0, 1}, ambient, members, 2, 2);
    CHECK(!res.witness.has_value());
    CHECK(!res.error.empty());
}

TEST_CASE("greedy red lift on an all-red blow-up") {
    Graph base = graph_power(Graph::path(4), 2);  // within-distance-2 clusters must be joined
    auto [blown, map] = complete_blowup(base, 3);
    auto ambient = blown_monochrome(blown, Color::Red);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < 4; ++v) members.push_back(map.members_of(v));
    std::vector<int> power_path{0, 1, 2, 3};
    auto res = lift_red_greedy(power_path, members, 2, ambient);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->color == Color::Red);
    CHECK(red_transversal_ok(res, power_path, members, 2, ambient));
    // smallest-id picks
    CHECK(res.witness->vertices == std::vector<int>{0, 3, 6, 9});
}

TEST_CASE("greedy red lift backtracks through a forced conflict") {
    // two clusters of two; only the second member of cluster 0 has a red edge
    // to anything in cluster 1
    std::vector<std::vector<int>> members{{0, 1}, {2, 3}};
    TwoColoring ambient(4);
    ambient.set(0, 2, Color::Blue);
    ambient.set(0, 3, Color::Blue);
    ambient.set(1, 2, Color::Red);
    ambient.set(1, 3, Color::Blue);
    auto res = lift_red_greedy({0, 1}, members, 1, ambient);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->vertices == std::vector<int>{1, 2});
}

TEST_CASE("greedy red lift fails within budget on an all-blue instance") {
    std::vector<std::vector<int>> members{{0, 1}, {2, 3}};
    TwoColoring ambient(4);
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 4; ++v) ambient.set(u, v, Color::Blue);
    auto res = lift_red_greedy({0, 1}, members, 1, ambient);
    CHECK(!res.witness.has_value());
    CHECK(!res.error.empty());
}

TEST_CASE("resampling red lift finishes in zero rounds when everything is red") {
    Graph base = graph_power(Graph::path(3), 2);
    auto [blown, map] = complete_blowup(base, 4);
    auto ambient = blown_monochrome(blown, Color::Red);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < 3; ++v) members.push_back(map.members_of(v));
    auto res = lift_red_resample({0, 1, 2}, members, 2, 2, ambient, 77);
    REQUIRE(res.witness.has_value());
    CHECK(res.resample_rounds == 0);
    CHECK(res.measured_violation_rate == 0.0);
    CHECK(red_transversal_ok(res, {0, 1, 2}, members, 2, ambient));
}

TEST_CASE("resampling red lift rejects instances violating its precondition") {
    // full blue bipartite block between the two clusters: contains blue K_{2,2}
    std::vector<std::vector<int>> members{{0, 1, 2}, {3, 4, 5}};
    TwoColoring ambient(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) ambient.set(u, v, Color::Blue);
    auto res = lift_red_resample({0, 1}, members, 2, 1, ambient, 5);
    CHECK(!res.witness.has_value());
    CHECK(res.error.find("precondition") != std::string::npos);
}

TEST_CASE("resampling red lift succeeds on a sparse-blue instance") {
    Rng rng(52);
    Graph base = graph_power(Graph::path(5), 2);
    auto [blown, map] = complete_blowup(base, 6);
    TwoColoring ambient(blown.order);
    for (auto [u, v] : blown.edges()) {
        bool intra = map.cluster_of(u) == map.cluster_of(v);
        ambient.set(u, v, !intra && rnd_unit(rng) < 0.15 ? Color::Blue : Color::Red);
    }
    std::vector<std::vector<int>> members;
    for (int v = 0; v < 5; ++v) members.push_back(map.members_of(v));
    auto res = lift_red_resample({0, 1, 2, 3, 4}, members, 2, 2, ambient, 9);
    if (res.witness) {
        CHECK(red_transversal_ok(res, {0, 1, 2, 3, 4}, members, 2, ambient));
    } else {
        CHECK(res.error.find("precondition") != std::string::npos);
    }
}

TEST_CASE("end-to-end solve on the all-blue blow-up") {
    SolveConfig cfg;
    cfg.n = 4;
    Graph host = Graph::path(cfg.n);
    auto [blown, map] = complete_blowup(graph_power(host, cfg.k), cfg.cluster_size);
    auto coloring = blown_monochrome(blown, Color::Blue);
    auto report = solve(host, blown, map, coloring, cfg);
    REQUIRE(report.success);
    CHECK(report.witness.color == Color::Blue);
    CHECK(verify_witness(blown, coloring, report.witness));
    CHECK(static_cast<int>(report.witness.vertices.size()) >= cfg.n);
}

TEST_CASE("end-to-end solve on the all-red blow-up") {
    SolveConfig cfg;
    cfg.n = 3;
    Graph host = Graph::complete(8);
    auto [blown, map] = complete_blowup(graph_power(host, cfg.k), cfg.cluster_size);
    auto coloring = blown_monochrome(blown, Color::Red);
    auto report = solve(host, blown, map, coloring, cfg);
    REQUIRE(report.success);
    CHECK(report.witness.color == Color::Red);
    CHECK(verify_witness(blown, coloring, report.witness));
    CHECK(report.swapped);
}

TEST_CASE("solve rejects mismatched blow-up input at the validate stage") {
    SolveConfig cfg;
    Graph host = Graph::complete(4);
    auto [blown, map] = complete_blowup(graph_power(host, cfg.k), cfg.cluster_size);
    Graph wrong(blown.order);  // edgeless, not the blow-up of host^k
    auto rep = solve(host, wrong, map, blown_monochrome(wrong, Color::Red), cfg);
    CHECK(!rep.success);
    CHECK(rep.failed_stage == "validate");

    auto partial = blown_monochrome(blown, Color::Red);
    partial.colors.erase(partial.colors.begin());
    auto rep2 = solve(host, blown, map, partial, cfg);
    CHECK(!rep2.success);
    CHECK(rep2.failed_stage == "validate");
}

TEST_CASE("flipping a coloring twice is the identity") {
    Rng rng(53);
    Graph g = Graph::complete(10);
    TwoColoring c(10);
    for (auto [u, v] : g.edges()) c.set(u, v, rnd_unit(rng) < 0.5 ? Color::Blue : Color::Red);
    auto back = c.flipped().flipped();
    for (auto [u, v] : g.edges()) CHECK(back.at(u, v) == c.at(u, v));
}
