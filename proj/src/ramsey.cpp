#include "ppr/ramsey.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ppr {

int RamseyTable::value(int t) const {
    auto it = override.find(t);
    if (it != override.end()) return it->second;
    switch (t) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 6;
        case 4: return 18;
        default:
            throw std::invalid_argument("r(K_t) is not known exactly for t >= 5; supply an override");
    }
}

namespace {

// Lexicographic clique search over pairs of a single color.
bool color_clique_search(const TwoColoring& c, const std::vector<int>& verts, Color col, int t,
                         std::vector<int>& clique, std::vector<int>& cand) {
    if (static_cast<int>(clique.size()) == t) return true;
    const int need = t - static_cast<int>(clique.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (static_cast<int>(cand.size() - i) < need) return false;
        int v = cand[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (c.at(v, cand[j]) == col) next.push_back(cand[j]);
        clique.push_back(v);
        if (color_clique_search(c, verts, col, t, clique, next)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace

std::optional<MonoClique> find_mono_clique(const TwoColoring& c, const std::vector<int>& vertices,
                                           int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (static_cast<int>(vertices.size()) < t) return std::nullopt;
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    if (t == 1) return MonoClique{{verts.front()}, Color::Blue};

    long long blue = 0, total = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j, ++total)
            if (c.at(verts[i], verts[j]) == Color::Blue) ++blue;
    Color first = (2 * blue >= total) ? Color::Blue : Color::Red;

    for (Color col : {first, flip(first)}) {
        std::vector<int> clique, cand = verts;
        if (color_clique_search(c, verts, col, t, clique, cand))
            return MonoClique{std::move(clique), col};
    }
    return std::nullopt;
}

std::optional<KssWitness> has_blue_kss(const TwoColoring& c, const std::vector<int>& left,
                                       const std::vector<int>& right, int s) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (static_cast<int>(left.size()) < s || static_cast<int>(right.size()) < s)
        return std::nullopt;
    const bool swap_sides = right.size() < left.size();
    const auto& small = swap_sides ? right : left;
    const auto& big = swap_sides ? left : right;
    if (big.size() > 64)
        throw std::invalid_argument("has_blue_kss supports sides of at most 64 vertices");

    // blue neighborhood of each small-side vertex as a bitmask over `big`
    std::vector<std::uint64_t> nbr(small.size(), 0);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < big.size(); ++j)
            if (c.get(small[i], big[j]) == Color::Blue) nbr[i] |= 1ULL << j;

    const int n = static_cast<int>(small.size());
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    for (;;) {
        std::uint64_t common = ~0ULL;
        for (int i : comb) common &= nbr[i];
        if (static_cast<int>(std::popcount(common)) >= s) {
            KssWitness w;
            for (int i : comb) w.left.push_back(small[i]);
            for (std::size_t j = 0; j < big.size() && static_cast<int>(w.right.size()) < s; ++j)
                if (common & (1ULL << j)) w.right.push_back(big[j]);
            if (swap_sides) std::swap(w.left, w.right);
            return w;
        }
        int i = s - 1;
        while (i >= 0 && comb[i] == n - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::nullopt;
}

TwoColoring auxiliary_coloring(const Graph& f_power, const TwoColoring& ambient,
                               const std::vector<std::vector<int>>& clique_members, int s) {
    if (static_cast<int>(clique_members.size()) != f_power.order)
        throw std::invalid_argument("clique table does not match the graph: mismatched blow-up map");
    TwoColoring chi(f_power.order);
    for (auto [u, v] : f_power.edges()) {
        auto w = has_blue_kss(ambient, clique_members[u], clique_members[v], s);
        chi.set(u, v, w ? Color::Blue : Color::Red);
    }
    return chi;
}

namespace {

inline bool is_blue(const TwoColoring& c, int u, int v) { return c.get(u, v) == Color::Blue; }

std::vector<std::vector<int>> blue_components(const TwoColoring& c, const std::vector<int>& verts) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(c.order, 1);
    for (int v : verts) seen[v] = 0;
    for (int v : verts) {
        if (seen[v]) continue;
        std::vector<int> comp{v}, stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : verts)
                if (!seen[w] && is_blue(c, u, w)) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Exact longest blue path in a small component via subset DP.
std::vector<int> longest_path_exact(const TwoColoring& c, const std::vector<int>& comp) {
    const int n = static_cast<int>(comp.size());
    std::vector<std::uint32_t> blue_adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && is_blue(c, comp[i], comp[j])) blue_adj[i] |= 1u << j;
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);  // mask -> endpoints
    for (int i = 0; i < n; ++i) reach[1u << i] = 1u << i;
    int best_len = 1, best_end = 0;
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        const int len = std::popcount(mask);
        if (len > best_len) {
            best_len = len;
            best_mask = mask;
            best_end = std::countr_zero(ends);
        }
        for (std::uint32_t e = ends; e;) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = blue_adj[v] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    // reconstruct backwards
    std::vector<int> path_idx{best_end};
    std::uint32_t mask = best_mask;
    int cur = best_end;
    while (std::popcount(mask) > 1) {
        std::uint32_t prev_mask = mask & ~(1u << cur);
        std::uint32_t cands = reach[prev_mask] & blue_adj[cur];
        int prev = std::countr_zero(cands);
        path_idx.push_back(prev);
        mask = prev_mask;
        cur = prev;
    }
    std::vector<int> path;
    for (auto it = path_idx.rbegin(); it != path_idx.rend(); ++it) path.push_back(comp[*it]);
    return path;
}

// Greedy growth plus rotations; deterministic, bounded effort.
std::vector<int> longest_path_heuristic(const TwoColoring& c, const std::vector<int>& comp) {
    std::vector<char> in_path(c.order, 0);
    std::vector<int> path{comp.front()};
    in_path[comp.front()] = 1;

    auto extend_back = [&]() {
        bool grew = false;
        for (;;) {
            int found = -1;
            for (int w : comp)
                if (!in_path[w] && is_blue(c, path.back(), w)) {
                    found = w;
                    break;
                }
            if (found < 0) break;
            path.push_back(found);
            in_path[found] = 1;
            grew = true;
        }
        return grew;
    };

    auto rotate_back = [&]() {
        // Posa rotation: find a pivot making a new endpoint that can extend.
        const int l = static_cast<int>(path.size());
        for (int i = 0; i + 2 < l; ++i) {
            if (!is_blue(c, path.back(), path[i])) continue;
            int new_end = path[i + 1];
            for (int w : comp)
                if (!in_path[w] && is_blue(c, new_end, w)) {
                    std::reverse(path.begin() + i + 1, path.end());
                    return true;
                }
        }
        return false;
    };

    int budget = 4 * static_cast<int>(comp.size()) + 16;
    for (;;) {
        bool grew = extend_back();
        std::reverse(path.begin(), path.end());
        grew = extend_back() || grew;
        std::reverse(path.begin(), path.end());
        if (static_cast<int>(path.size()) == static_cast<int>(comp.size())) break;
        if (!grew && --budget < 0) break;
        if (!grew) {
            if (!rotate_back()) {
                std::reverse(path.begin(), path.end());
                bool rotated = rotate_back();
                std::reverse(path.begin(), path.end());
                if (!rotated) break;
            }
        }
    }
    return path;
}

}  // namespace

CoverResult cover_blue_paths_red_multipartite(const TwoColoring& c, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    CoverResult res;
    std::vector<int> rem(c.order);
    for (int i = 0; i < c.order; ++i) rem[i] = i;

    for (int slot = 0; slot < k; ++slot) {
        auto comps = blue_components(c, rem);
        const std::vector<int>* biggest = nullptr;
        for (const auto& comp : comps)
            if (comp.size() >= 2 && (!biggest || comp.size() > biggest->size())) biggest = &comp;
        if (!biggest) break;
        std::vector<int> path = biggest->size() <= 16 ? longest_path_exact(c, *biggest)
                                                      : longest_path_heuristic(c, *biggest);
        if (path.size() < 2) break;
        res.cover.blue_paths.push_back(path);
        std::vector<char> used(c.order, 0);
        for (int v : path) used[v] = 1;
        std::vector<int> next_rem;
        for (int v : rem)
            if (!used[v]) next_rem.push_back(v);
        rem = std::move(next_rem);
    }

    // Blue edges left in the remainder must stay inside one class, so blue
    // components are atomic; pack them largest-first into the smallest class.
    res.cover.classes.assign(k + 1, {});
    auto comps = blue_components(c, rem);
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    for (auto& comp : comps) {
        auto smallest = std::min_element(
            res.cover.classes.begin(), res.cover.classes.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        smallest->insert(smallest->end(), comp.begin(), comp.end());
    }
    for (auto& cls : res.cover.classes) std::sort(cls.begin(), cls.end());

    res.max_class = 0;
    res.min_class = res.cover.classes.empty() ? 0 : SIZE_MAX;
    for (const auto& cls : res.cover.classes) {
        res.max_class = std::max(res.max_class, cls.size());
        res.min_class = std::min(res.min_class, cls.size());
    }
    res.ok = verify_cover(c, k, res.cover);
    res.search_exhausted = !res.ok;
    return res;
}

bool verify_cover(const TwoColoring& c, int k, const PartitionCover& cover) {
    if (static_cast<int>(cover.blue_paths.size()) > k) return false;
    if (static_cast<int>(cover.classes.size()) > k + 1) return false;
    std::vector<char> seen(c.order, 0);
    auto mark = [&](int v) {
        if (v < 0 || v >= c.order || seen[v]) return false;
        seen[v] = 1;
        return true;
    };
    for (const auto& p : cover.blue_paths) {
        if (p.empty()) return false;
        for (int v : p)
            if (!mark(v)) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (c.get(p[i], p[i + 1]) != Color::Blue) return false;
    }
    for (const auto& cls : cover.classes)
        for (int v : cls)
            if (!mark(v)) return false;
    for (int v = 0; v < c.order; ++v)
        if (!seen[v]) return false;
    // cross-class pairs: red or missing
    for (std::size_t i = 0; i < cover.classes.size(); ++i)
        for (std::size_t j = i + 1; j < cover.classes.size(); ++j)
            for (int u : cover.classes[i])
                for (int v : cover.classes[j])
                    if (c.get(u, v) == Color::Blue) return false;
    return true;
}

std::optional<KssWitness> find_kss_bipartite(const Graph& bip, int t, int s) {
    if (bip.order != 2 * t) throw std::invalid_argument("bipartite graph must have 2t vertices");
    for (int u = 0; u < t; ++u)
        for (int v : bip.adj[u])
            if (v < t) throw std::invalid_argument("edges must cross the bipartition");
    TwoColoring all_blue(bip.order);
    for (auto [u, v] : bip.edges()) all_blue.set(u, v, Color::Blue);
    std::vector<int> left(t), right(t);
    for (int i = 0; i < t; ++i) {
        left[i] = i;
        right[i] = t + i;
    }
    return has_blue_kss(all_blue, left, right, s);
}

bool kst_edge_bound_check(const Graph& bip, int t, int s) {
    if (find_kss_bipartite(bip, t, s)) return true;
    double bound = 4.0 * std::pow(static_cast<double>(t), 2.0 - 1.0 / s);
    return static_cast<double>(bip.edge_count()) <= bound;
}

}  // namespace ppr
