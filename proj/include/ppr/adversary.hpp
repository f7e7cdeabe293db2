#ifndef PPR_ADVERSARY_HPP
#define PPR_ADVERSARY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppr/constants.hpp"
#include "ppr/graph.hpp"
#include "ppr/lift.hpp"

namespace ppr {

enum class AdversaryKind { UniformRandom, AllBlue, AllRed, ClusterParity, AntiClique, FileReplay };

std::string adversary_name(AdversaryKind kind);
AdversaryKind parse_adversary(const std::string& name);

struct Adversary {
    AdversaryKind kind = AdversaryKind::UniformRandom;
    std::uint64_t seed = 0;
    std::string replay_path;  // FileReplay only
};

/// Total coloring of g, deterministic given the seed. ClusterParity and
/// AntiClique use the blow-up map when given; without one every vertex is
/// its own cluster.
TwoColoring color_with(const Adversary& adv, const Graph& g, const BlowupMap* map = nullptr);

struct ExperimentSpec {
    int k = 2;
    int n = 10;
    int cluster_size = 6;
    int s = 2;
    int t = 3;
    BigRat host_a = BigRat(6);
    BigRat host_c = BigRat(1);
    std::string host_file;           // fixed host instead of sampling
    BigRat epsilon = BigRat(1, 20);
    Lifter lifter = Lifter::Greedy;
    std::vector<AdversaryKind> adversaries;
    int trials = 1;                  // per adversary
    std::uint64_t master_seed = 0;
    std::string outdir;              // failing trials are dumped here when set
    int host_retries = 10;           // re-seed while expansion is falsified
    long long cert_trials = 200;     // sampled certifier trials per host
};

struct ExperimentResult {
    std::string report;              // full text report, bit-reproducible
    int trials_run = 0;
    int witnesses = 0;
    int witnesses_blue = 0, witnesses_red = 0;
    int failures = 0;
    std::map<std::string, int> failures_by_stage;
    bool all_emitted_verified = true;
};

/// Seeded campaign: per trial build/load host, certify expansion, blow up,
/// color, solve, verify. Exit-code contract of the CLI: nonzero iff some
/// emitted witness failed independent verification.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Realized edge counts of the blow-up against the linear budget formulas.
std::string edge_budget_report(int k, const Graph& host, int cluster_size);

}  // namespace ppr

#endif
