#include "ppr/graph.hpp"

#include <deque>

namespace ppr {

Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("graph_power requires k >= 1");
    Graph out(g.order);
    std::vector<int> dist(g.order);
    std::deque<int> queue;
    for (int s = 0; s < g.order; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (dist[u] == k) continue;
            for (int v : g.adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    if (v > s) out.add_edge(s, v);
                    queue.push_back(v);
                }
            }
        }
    }
    return out;
}

std::pair<Graph, BlowupMap> complete_blowup(const Graph& g, int cluster_size) {
    if (cluster_size < 1) throw std::invalid_argument("cluster_size must be >= 1");
    BlowupMap map{g.order, cluster_size};
    Graph out(g.order * cluster_size);
    for (int v = 0; v < g.order; ++v)
        for (int i = 0; i < cluster_size; ++i)
            for (int j = i + 1; j < cluster_size; ++j)
                out.add_edge(v * cluster_size + i, v * cluster_size + j);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < cluster_size; ++i)
            for (int j = 0; j < cluster_size; ++j)
                out.add_edge(u * cluster_size + i, v * cluster_size + j);
    return {std::move(out), map};
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) g.check_vertex(v);
    std::vector<int> new_id(g.order, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
    InducedSubgraph out{Graph(static_cast<int>(verts.size())), std::move(verts)};
    for (std::size_t i = 0; i < out.original.size(); ++i)
        for (int w : g.adj[out.original[i]])
            if (new_id[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), new_id[w]);
    return out;
}

bool TwoColoring::total_on(const Graph& g) const {
    if (order != g.order) return false;
    if (static_cast<long long>(colors.size()) != g.edge_count()) return false;
    for (const auto& [k, c] : colors) {
        (void)c;
        int u = static_cast<int>(k >> 32);
        int v = static_cast<int>(k & 0xffffffffu);
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

bool verify_witness(const Graph& g, const TwoColoring& coloring, const Witness& w) {
    if (w.power < 1) return false;
    const auto& xs = w.vertices;
    for (int v : xs)
        if (v < 0 || v >= g.order) return false;
    std::vector<int> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const int m = static_cast<int>(xs.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m && j - i <= w.power; ++j) {
            if (!g.has_edge(xs[i], xs[j])) return false;
            auto c = coloring.get(xs[i], xs[j]);
            if (!c || *c != w.color) return false;
        }
    }
    return true;
}

}  // namespace ppr
