#ifndef PPR_LIFT_HPP
#define PPR_LIFT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppr/constants.hpp"
#include "ppr/graph.hpp"
#include "ppr/ramsey.hpp"

namespace ppr {

enum class Lifter { Greedy, Resample };

struct SolveConfig {
    int k = 2;
    int n = 10;             // target base path length
    int s = 2;
    int t = 3;
    int cluster_size = 6;
    BigRat epsilon = BigRat(1, 20);  // desk-scale class-size threshold scale
    Lifter lifter = Lifter::Greedy;
    std::uint64_t seed = 0;
    long long resample_max_rounds = 1'000'000;
    long long greedy_budget = 2'000'000;
};

/// Chosen monochromatic K_t per base vertex (ambient = blown-up ids).
struct MonoCliqueAssignment {
    // index: base vertex; nullopt if the Ramsey step was not run for it
    std::vector<std::optional<MonoClique>> cliques;
};

struct MajoritySelection {
    bool swapped = false;           // color roles exchanged globally
    int blue_cliques = 0, red_cliques = 0;  // counts in original colors
    std::vector<int> w;             // base vertices whose clique is majority-colored
    MonoCliqueAssignment assignment;  // restricted to w (others nullopt)
};

struct RamseyStepFailure {
    int base_vertex = -1;
};

/// Per-cluster Ramsey step plus majority-side selection. On success |w| is at
/// least half the base order; if the red cliques form the majority the color
/// roles are swapped and the swap recorded.
std::optional<MajoritySelection> select_majority_side(const BlowupMap& map,
                                                      const TwoColoring& coloring, int t,
                                                      RamseyStepFailure* failure = nullptr);

struct DichotomyResult {
    enum class Kind { BluePath, RedPowerPath, Infeasible };
    Kind kind = Kind::Infeasible;
    std::vector<int> path;       // vertex ids of f
    PartitionCover cover;        // the cover that was searched
    std::string diagnostics;
};

/// Claim-style dichotomy: complete chi_prime on f_power to a colored complete
/// graph (absent pairs red), search the cover; a blue path with >= n vertices
/// wins, otherwise the classes feed the transversal search on f itself.
/// Class sizes are checked against ceil(epsilon * a * n).
DichotomyResult claim_dichotomy(const Graph& f, int k, int n, const TwoColoring& chi_prime,
                                const Graph& f_power, const BigRat& epsilon, const BigRat& a);

struct LiftResult {
    std::optional<Witness> witness;
    std::string error;           // empty on success
    long long resample_rounds = 0;
    double measured_violation_rate = 0.0;  // resample lifter: max per-pair blue density
};

/// Case-1 lift: blue path x_1..x_n in the auxiliary graph to a blue power
/// path in the blow-up. With s >= 2k and cliques of size >= 2k this is the
/// K_{s,s}-witness construction of length 2kn; below that regime a chain DP
/// over k-blocks per cluster is used instead (length kn).
LiftResult lift_blue(const std::vector<int>& blue_path, const TwoColoring& ambient,
                     const std::vector<std::vector<int>>& clique_members, int s, int k);

/// Case-2 lift, backtracking flavour: picks y_i in clique i left to right,
/// smallest id whose edges to the previous k picks are all red; chronological
/// backtracking within the node budget.
LiftResult lift_red_greedy(const std::vector<int>& power_path,
                           const std::vector<std::vector<int>>& clique_members, int k,
                           const TwoColoring& ambient, long long budget = 2'000'000);

/// Case-2 lift, resampling flavour: all y_i sampled uniformly, then the
/// lowest-indexed violated pair is resampled until no pair within distance k
/// is blue. Requires the K_{s,s}-freeness precondition and reports a
/// distinct error when it is violated.
LiftResult lift_red_resample(const std::vector<int>& power_path,
                             const std::vector<std::vector<int>>& clique_members, int s, int k,
                             const TwoColoring& ambient, std::uint64_t seed,
                             long long max_rounds = 1'000'000);

struct SolveReport {
    bool success = false;
    Witness witness;             // valid iff success
    std::string failed_stage;    // empty iff success
    std::string diagnostics;
    // stage counters
    int blue_cliques = 0, red_cliques = 0;
    bool swapped = false;
    int f_order = 0;
    long long chi_blue = 0, chi_red = 0;
    std::vector<std::size_t> cover_path_lengths;
    std::vector<std::size_t> cover_class_sizes;
    std::string case_taken;      // "blue-lift" or "red-lift"
    long long lifter_rounds = 0;

    std::string to_string() const;
};

/// End-to-end pipeline: majority side -> F = host[W] -> auxiliary coloring ->
/// dichotomy -> lift -> independent verification. Never returns an
/// unverified witness; the reported witness is in original colors.
SolveReport solve(const Graph& host, const Graph& blown, const BlowupMap& map,
                  const TwoColoring& coloring, const SolveConfig& cfg);

}  // namespace ppr

#endif
