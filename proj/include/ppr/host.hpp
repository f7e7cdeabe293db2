#ifndef PPR_HOST_HPP
#define PPR_HOST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppr/constants.hpp"
#include "ppr/graph.hpp"

namespace ppr {

struct PruneResult {
    Graph graph;
    std::vector<int> kept;  // new id -> id in the input graph
};

/// Iteratively removes a max-degree vertex (ties: largest id) until
/// target_order vertices remain; result is the induced subgraph, relabelled.
PruneResult degree_prune(const Graph& g, int target_order);

struct HostSample {
    Graph sampled;           // G(2an, c/n)
    Graph host;              // pruned to an vertices
    std::vector<int> kept;   // host id -> sampled id
    int max_degree = 0;      // realized max degree of host
};

/// Binomial random graph on 2an vertices with edge probability c/n, pruned
/// down to an vertices. Pairs are drawn in canonical (u,v) order from a
/// seeded generator, so the result is reproducible bit for bit.
HostSample sample_host(const BigRat& a, long long n, const BigRat& c, std::uint64_t seed);

enum class CertMode { Exact, Sampled };
enum class CertVerdict { Certified, Falsified, Unfalsified };

struct ExpansionCertificate {
    CertMode mode = CertMode::Exact;
    int sigma = 0;
    CertVerdict verdict = CertVerdict::Certified;
    // Falsified only: disjoint S, T of size >= sigma with no crossing edge.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> counterexample;
    long long trials = 0;  // sampled mode only

    std::string to_string() const;
};

/// Re-check a Falsified counterexample against the graph.
bool recheck_counterexample(const Graph& h, const ExpansionCertificate& cert);

struct WorkBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decides whether every pair of disjoint sigma-sets has a crossing edge.
/// Subsets of size exactly sigma suffice: supersets only gain edges.
/// Refuses with WorkBoundExceeded when C(n, sigma) * n exceeds work_bound.
ExpansionCertificate certify_expansion_exact(const Graph& h, int sigma,
                                             std::uint64_t work_bound = 200'000'000ULL);

/// Randomized falsification: samples disjoint (S, T) pairs; Falsified results
/// carry a re-checkable counterexample, Unfalsified is explicitly not a proof.
ExpansionCertificate certify_expansion_sampled(const Graph& h, int sigma, long long trials,
                                               std::uint64_t seed);

}  // namespace ppr

#endif
