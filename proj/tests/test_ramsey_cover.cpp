#include <doctest.h>

#include <algorithm>
#include <functional>

#include "ppr/graph.hpp"
#include "ppr/ramsey.hpp"
#include "ppr/rng.hpp"

using namespace ppr;

namespace {

TwoColoring monochrome(const Graph& g, Color c) {
    TwoColoring col(g.order);
    for (auto [u, v] : g.edges()) col.set(u, v, c);
    return col;
}

TwoColoring random_complete_coloring(Rng& rng, int order, double blue_p) {
    TwoColoring c(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            c.set(u, v, rnd_unit(rng) < blue_p ? Color::Blue : Color::Red);
    return c;
}

// Brute force: does any monochromatic K_t exist among `vertices`?
bool naive_mono_clique_exists(const TwoColoring& c, const std::vector<int>& vertices, int t) {
    const int m = static_cast<int>(vertices.size());
    std::vector<int> idx(t);
    std::function<bool(int, int)> rec = [&](int pos, int start) {
        if (pos == t) {
            for (Color col : {Color::Blue, Color::Red}) {
                bool mono = true;
                for (int i = 0; i < t && mono; ++i)
                    for (int j = i + 1; j < t && mono; ++j)
                        if (c.at(vertices[idx[i]], vertices[idx[j]]) != col) mono = false;
                if (mono) return true;
            }
            return false;
        }
        for (int v = start; v < m; ++v) {
            idx[pos] = v;
            if (rec(pos + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Brute force blue K_{s,s} existence between two vertex lists.
bool naive_blue_kss(const TwoColoring& c, const std::vector<int>& left,
                    const std::vector<int>& right, int s) {
    const int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());
    if (nl < s || nr < s) return false;
    std::vector<int> li(s), ri(s);
    std::function<bool(int, int)> pick_right = [&](int pos, int start) {
        if (pos == s) {
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j)
                    if (c.get(left[li[i]], right[ri[j]]) != Color::Blue) return false;
            return true;
        }
        for (int v = start; v < nr; ++v) {
            ri[pos] = v;
            if (pick_right(pos + 1, v + 1)) return true;
        }
        return false;
    };
    std::function<bool(int, int)> pick_left = [&](int pos, int start) {
        if (pos == s) return pick_right(0, 0);
        for (int v = start; v < nl; ++v) {
            li[pos] = v;
            if (pick_left(pos + 1, v + 1)) return true;
        }
        return false;
    };
    return pick_left(0, 0);
}

}  // namespace

TEST_CASE("ramsey table values and the t >= 5 guard") {
    RamseyTable table;
    CHECK(table.value(1) == 1);
    CHECK(table.value(2) == 2);
    CHECK(table.value(3) == 6);
    CHECK(table.value(4) == 18);
    CHECK_THROWS_AS(table.value(5), std::invalid_argument);

    RamseyTable overridden;
    overridden.override[5] = 49;
    CHECK(overridden.value(5) == 49);
    CHECK(overridden.value(3) == 6);
}

TEST_CASE("every 2-coloring of K_6 has a monochromatic triangle") {
    std::vector<int> verts{0, 1, 2, 3, 4, 5};
    Rng rng(41);
    for (int trial = 0; trial < 512; ++trial) {
        std::uint32_t bits = static_cast<std::uint32_t>(rng());
        TwoColoring c(6);
        int e = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                c.set(u, v, (bits >> e++) & 1 ? Color::Blue : Color::Red);
        auto mc = find_mono_clique(c, verts, 3);
        REQUIRE(mc.has_value());
        CHECK(mc->vertices.size() == 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(c.at(mc->vertices[i], mc->vertices[j]) == mc->color);
    }
}

TEST_CASE("the pentagon-pentagram coloring of K_5 has no monochromatic triangle") {
    // blue edges form C_5, red edges its complement (also C_5)
    TwoColoring c(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            c.set(u, v, (v - u == 1 || v - u == 4) ? Color::Blue : Color::Red);
    CHECK(!find_mono_clique(c, {0, 1, 2, 3, 4}, 3).has_value());
    CHECK(!naive_mono_clique_exists(c, {0, 1, 2, 3, 4}, 3));
}

TEST_CASE("mono clique search agrees with brute force on random colorings") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int order = 4 + static_cast<int>(rnd_below(rng, 6));
        auto c = random_complete_coloring(rng, order, 0.5);
        std::vector<int> verts(order);
        for (int v = 0; v < order; ++v) verts[v] = v;
        for (int t = 2; t <= 4; ++t) {
            auto mc = find_mono_clique(c, verts, t);
            CHECK(mc.has_value() == naive_mono_clique_exists(c, verts, t));
            if (mc) {
                for (std::size_t i = 0; i < mc->vertices.size(); ++i)
                    for (std::size_t j = i + 1; j < mc->vertices.size(); ++j)
                        CHECK(c.at(mc->vertices[i], mc->vertices[j]) == mc->color);
            }
        }
    }
}

TEST_CASE("blue K_{s,s} search examples") {
    // full blue bipartite 3x3
    TwoColoring all(6);
    std::vector<int> left{0, 1, 2}, right{3, 4, 5};
    for (int u : left)
        for (int v : right) all.set(u, v, Color::Blue);
    auto w = has_blue_kss(all, left, right, 2);
    REQUIRE(w.has_value());
    CHECK(w->left.size() == 2);
    CHECK(w->right.size() == 2);
    for (int u : w->left)
        for (int v : w->right) CHECK(all.at(u, v) == Color::Blue);

    // perfect matching on 4+4 is K_{1,1}-rich but K_{2,2}-free
    TwoColoring match(8);
    std::vector<int> l4{0, 1, 2, 3}, r4{4, 5, 6, 7};
    for (int u : l4)
        for (int v : r4) match.set(u, v, u + 4 == v ? Color::Blue : Color::Red);
    CHECK(has_blue_kss(match, l4, r4, 1).has_value());
    CHECK(!has_blue_kss(match, l4, r4, 2).has_value());
}

TEST_CASE("blue K_{s,s} search agrees with brute force") {
    Rng rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        int nl = 2 + static_cast<int>(rnd_below(rng, 5));
        int nr = 2 + static_cast<int>(rnd_below(rng, 5));
        std::vector<int> left(nl), right(nr);
        for (int i = 0; i < nl; ++i) left[i] = i;
        for (int i = 0; i < nr; ++i) right[i] = nl + i;
        TwoColoring c(nl + nr);
        for (int u : left)
            for (int v : right) c.set(u, v, rnd_unit(rng) < 0.6 ? Color::Blue : Color::Red);
        for (int s = 1; s <= 3; ++s) {
            auto w = has_blue_kss(c, left, right, s);
            CHECK(w.has_value() == naive_blue_kss(c, left, right, s));
            if (w) {
                CHECK(static_cast<int>(w->left.size()) == s);
                for (int u : w->left)
                    for (int v : w->right) CHECK(c.at(u, v) == Color::Blue);
            }
        }
    }
}

TEST_CASE("auxiliary coloring reflects blue K_{s,s} between cliques") {
    // base path 0-1-2, each base vertex owns a 3-clique in the ambient ids
    Graph f = Graph::path(3);
    std::vector<std::vector<int>> members{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    TwoColoring ambient(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) ambient.set(u, v, Color::Red);
    // blue K_{2,2} only between cliques 0 and 1
    ambient.set(0, 3, Color::Blue);
    ambient.set(0, 4, Color::Blue);
    ambient.set(1, 3, Color::Blue);
    ambient.set(1, 4, Color::Blue);
    auto chi = auxiliary_coloring(f, ambient, members, 2);
    CHECK(chi.at(0, 1) == Color::Blue);
    CHECK(chi.at(1, 2) == Color::Red);

    // locality: recoloring pairs outside the 0-1 bipartite block changes nothing
    TwoColoring tweaked = ambient;
    tweaked.set(6, 8, Color::Blue);
    tweaked.set(3, 5, Color::Blue);
    auto chi2 = auxiliary_coloring(f, tweaked, members, 2);
    CHECK(chi2.at(0, 1) == chi.at(0, 1));
    CHECK(chi2.at(1, 2) == chi.at(1, 2));

    std::vector<std::vector<int>> bad{{0, 1, 2}, {3, 4, 5}};
    CHECK_THROWS_AS(auxiliary_coloring(f, ambient, bad, 2), std::invalid_argument);
}

TEST_CASE("cover search always returns a verified cover on complete colorings") {
    Rng rng(44);
    for (int trial = 0; trial < 120; ++trial) {
        int order = 1 + static_cast<int>(rnd_below(rng, 20));
        double p = rnd_unit(rng);
        auto c = random_complete_coloring(rng, order, p);
        for (int k = 1; k <= 3; ++k) {
            auto res = cover_blue_paths_red_multipartite(c, k);
            REQUIRE(res.ok);
            CHECK(!res.search_exhausted);
            CHECK(verify_cover(c, k, res.cover));
            CHECK(res.cover.blue_paths.size() <= static_cast<std::size_t>(k));
            CHECK(res.cover.classes.size() == static_cast<std::size_t>(k + 1));
        }
    }
}

TEST_CASE("cover of an all-blue clique is one long path") {
    auto c = monochrome(Graph::complete(12), Color::Blue);
    auto res = cover_blue_paths_red_multipartite(c, 2);
    REQUIRE(res.ok);
    std::size_t longest = 0;
    for (auto& p : res.cover.blue_paths) longest = std::max(longest, p.size());
    CHECK(longest == 12);
    CHECK(verify_cover(c, 2, res.cover));
}

TEST_CASE("cover of an all-red clique has no paths and balanced classes") {
    auto c = monochrome(Graph::complete(12), Color::Red);
    auto res = cover_blue_paths_red_multipartite(c, 2);
    REQUIRE(res.ok);
    std::size_t in_paths = 0;
    for (auto& p : res.cover.blue_paths) in_paths += p.size();
    CHECK(in_paths == 0);
    CHECK(res.max_class == 4);
    CHECK(res.min_class == 4);
    CHECK(verify_cover(c, 2, res.cover));
}

TEST_CASE("verify_cover rejects broken covers") {
    auto c = monochrome(Graph::complete(6), Color::Blue);
    auto res = cover_blue_paths_red_multipartite(c, 1);
    REQUIRE(res.ok);
    auto dup = res.cover;
    if (!dup.blue_paths.empty() && !dup.blue_paths[0].empty())
        dup.classes[0].push_back(dup.blue_paths[0][0]);
    else
        dup.classes[0].push_back(dup.classes.back().empty() ? 0 : dup.classes.back()[0]);
    CHECK(!verify_cover(c, 1, dup));

    // blue cross-class pair
    PartitionCover bad;
    bad.classes = {{0, 1, 2}, {3, 4, 5}};
    CHECK(!verify_cover(c, 1, bad));
}

TEST_CASE("bipartite K_{s,s} extraction and the edge bound") {
    // complete bipartite 4+4 contains K_{2,2}; bound trivially satisfied
    Graph full(8);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) full.add_edge(u, v);
    auto w = find_kss_bipartite(full, 4, 2);
    REQUIRE(w.has_value());
    for (int u : w->left)
        for (int v : w->right) CHECK(full.has_edge(u, v));
    CHECK(kst_edge_bound_check(full, 4, 2));

    // perfect matching: K_{2,2}-free, few edges, bound holds
    Graph match(8);
    for (int u = 0; u < 4; ++u) match.add_edge(u, u + 4);
    CHECK(!find_kss_bipartite(match, 4, 2).has_value());
    CHECK(kst_edge_bound_check(match, 4, 2));

    Graph cross(4);
    cross.add_edge(0, 1);
    CHECK_THROWS_AS(find_kss_bipartite(cross, 2, 1), std::invalid_argument);
}

TEST_CASE("kst bound holds across a random bipartite corpus") {
    Rng rng(45);
    for (int trial = 0; trial < 60; ++trial) {
        int t = 3 + static_cast<int>(rnd_below(rng, 5));
        Graph bip(2 * t);
        for (int u = 0; u < t; ++u)
            for (int v = t; v < 2 * t; ++v)
                if (rnd_unit(rng) < 0.5) bip.add_edge(u, v);
        CHECK(kst_edge_bound_check(bip, t, 2));
        auto w = find_kss_bipartite(bip, t, 2);
        if (w) {
            for (int u : w->left)
                for (int v : w->right) CHECK(bip.has_edge(u, v));
        }
    }
}
