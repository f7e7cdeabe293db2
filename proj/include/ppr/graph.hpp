#ifndef PPR_GRAPH_HPP
#define PPR_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ppr {

enum class Color { Red, Blue };

inline Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
inline std::string color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

/// Undirected simple graph, contiguous vertex ids, sorted adjacency lists.
struct Graph {
    int order = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n) : order(n), adj(n) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= order) throw std::out_of_range("vertex id out of range");
    }

    // Ignores duplicates; rejects self-loops.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        auto& au = adj[u];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v) return;
        au.insert(it, v);
        auto& av = adj[v];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= order || v < 0 || v >= order || u == v) return false;
        const auto& au = adj[u];
        return std::binary_search(au.begin(), au.end(), v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj[v].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj) d = std::max<int>(d, static_cast<int>(a.size()));
        return d;
    }

    long long edge_count() const {
        long long s = 0;
        for (const auto& a : adj) s += static_cast<long long>(a.size());
        return s / 2;
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(static_cast<size_t>(edge_count()));
        for (int u = 0; u < order; ++u)
            for (int v : adj[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool operator==(const Graph& o) const { return order == o.order && adj == o.adj; }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
        return g;
    }

    static Graph cycle(int n) {
        Graph g = path(n);
        if (n >= 3) g.add_edge(n - 1, 0);
        return g;
    }
};

/// kth power: same vertices, edges between vertices at distance 1..k.
Graph graph_power(const Graph& g, int k);

/// Cluster structure of a complete blow-up; blown id = base * cluster_size + offset.
struct BlowupMap {
    int base_order = 0;
    int cluster_size = 1;

    int cluster_of(int blown) const { return blown / cluster_size; }

    std::vector<int> members_of(int base) const {
        std::vector<int> m(cluster_size);
        for (int i = 0; i < cluster_size; ++i) m[i] = base * cluster_size + i;
        return m;
    }
};

std::pair<Graph, BlowupMap> complete_blowup(const Graph& g, int cluster_size);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;  // new id -> original id
};

/// Induced subgraph on the given vertices, relabelled 0..|verts|-1 in sorted order.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts);

/// Total Red/Blue assignment on the edges of a host of the given order.
struct TwoColoring {
    int order = 0;
    std::unordered_map<std::uint64_t, Color> colors;

    TwoColoring() = default;
    explicit TwoColoring(int n) : order(n) {}

    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    void set(int u, int v, Color c) {
        if (u == v) throw std::invalid_argument("cannot color a self-loop");
        colors[key(u, v)] = c;
    }

    std::optional<Color> get(int u, int v) const {
        auto it = colors.find(key(u, v));
        if (it == colors.end()) return std::nullopt;
        return it->second;
    }

    Color at(int u, int v) const {
        auto c = get(u, v);
        if (!c) throw std::out_of_range("edge is not colored");
        return *c;
    }

    std::size_t size() const { return colors.size(); }

    /// Defined for every edge of g and for no non-edge.
    bool total_on(const Graph& g) const;

    TwoColoring flipped() const {
        TwoColoring f(order);
        for (const auto& [k, c] : colors) f.colors.emplace(k, flip(c));
        return f;
    }
};

/// Claimed monochromatic copy of P_m^power.
struct Witness {
    Color color = Color::Red;
    int power = 1;
    std::vector<int> vertices;
};

/// Independent check of the witness invariants; never traps on malformed input.
bool verify_witness(const Graph& g, const TwoColoring& coloring, const Witness& w);

}  // namespace ppr

#endif
