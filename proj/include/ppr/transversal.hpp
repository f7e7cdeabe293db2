#ifndef PPR_TRANSVERSAL_HPP
#define PPR_TRANSVERSAL_HPP

#include <string>
#include <vector>

#include "ppr/graph.hpp"

namespace ppr {

/// Host plus pairwise disjoint classes A_1..A_m; the goal is a path of
/// target_length vertices whose position j lies in class ((j-1) mod m) + 1.
struct TransversalInstance {
    Graph host;
    std::vector<std::vector<int>> classes;
    int target_length = 1;
};

struct TraceStep {
    enum class Kind { Start, Extend, DeadEnd };
    Kind kind;
    int vertex;
};

/// Running state: per class the unused set U_i, the dead-end set D_i, and the
/// current path. U_i, D_i and V(P) ∩ A_i partition A_i at all times.
struct DfsState {
    std::vector<std::vector<int>> unused;  // sorted
    std::vector<std::vector<int>> dead;    // sorted
    std::vector<int> path;
};

struct TransversalResult {
    bool found = false;
    std::vector<int> path;          // on success
    DfsState terminal;              // on failure
    std::string failure_reason;     // on failure
    std::vector<TraceStep> trace;   // when recording was requested
};

/// Depth-first transversal path search with dead-end bookkeeping. The outer
/// loop runs while 2|D_i| <= |A_i| for all i; vertex picks are always the
/// smallest candidate id. Failure is a first-class outcome carrying the
/// terminal state.
TransversalResult find_transversal_path(const TransversalInstance& inst,
                                        bool record_trace = false);

/// Reconstructs every intermediate state of a recorded run; the returned
/// sequence starts with the initial state and has one entry per step applied.
/// Throws std::invalid_argument on a log/instance mismatch.
std::vector<DfsState> replay_trace(const TransversalInstance& inst,
                                   const std::vector<TraceStep>& trace);

}  // namespace ppr

#endif
