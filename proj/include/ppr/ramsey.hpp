#ifndef PPR_RAMSEY_HPP
#define PPR_RAMSEY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppr/graph.hpp"

namespace ppr {

/// Exact Ramsey numbers r(K_t) for t <= 4; anything larger must be supplied
/// explicitly by the caller -- there is no estimate masquerading as exact.
struct RamseyTable {
    std::map<int, int> override;

    int value(int t) const;
};

struct MonoClique {
    std::vector<int> vertices;
    Color color;
};

/// Monochromatic K_t among `vertices` (all pairs must be colored). Branches
/// on the majority color first; within a color the witness is the
/// lexicographically least clique. NotFound is possible only when
/// |vertices| < r(K_t).
std::optional<MonoClique> find_mono_clique(const TwoColoring& c, const std::vector<int>& vertices,
                                           int t);

struct KssWitness {
    std::vector<int> left;
    std::vector<int> right;
};

/// Blue K_{s,s} between the two vertex lists under the ambient coloring;
/// exact search (s-subsets of the smaller side, blue-neighborhood
/// intersection on the other).
std::optional<KssWitness> has_blue_kss(const TwoColoring& c, const std::vector<int>& left,
                                       const std::vector<int>& right, int s);

/// Auxiliary coloring: an edge {u, v} of f_power is blue iff the bipartite
/// graph between the chosen cliques of u and v contains a blue K_{s,s}.
/// clique_members[i] lists the ambient ids of vertex i's clique.
TwoColoring auxiliary_coloring(const Graph& f_power, const TwoColoring& ambient,
                               const std::vector<std::vector<int>>& clique_members, int s);

/// <= k vertex-disjoint blue paths plus classes A_1..A_{k+1}; everything is
/// pairwise disjoint, the union is the whole vertex set, path edges are blue
/// and cross-class pairs are red or missing.
struct PartitionCover {
    std::vector<std::vector<int>> blue_paths;
    std::vector<std::vector<int>> classes;
};

struct CoverResult {
    bool ok = false;
    PartitionCover cover;
    bool search_exhausted = false;
    std::size_t max_class = 0, min_class = 0;  // realized balance, reported not enforced
};

/// Cover search on a coloring of K_m (absent pairs are treated as red).
/// Strategy: extract up to k long blue paths (exact subset DP on small
/// components, greedy + rotations otherwise), then group the remaining blue
/// components into k+1 classes. Every result passes verify_cover before it
/// is returned.
CoverResult cover_blue_paths_red_multipartite(const TwoColoring& c, int k);

/// Independent check of the PartitionCover invariants.
bool verify_cover(const TwoColoring& c, int k, const PartitionCover& cover);

/// Exact K_{s,s} search in a balanced bipartite graph with sides
/// {0..t-1} and {t..2t-1}.
std::optional<KssWitness> find_kss_bipartite(const Graph& bip, int t, int s);

/// True iff the graph contains a K_{s,s} or has at most 4 t^{2-1/s} edges.
bool kst_edge_bound_check(const Graph& bip, int t, int s);

}  // namespace ppr

#endif
