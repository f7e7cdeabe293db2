#include "ppr/adversary.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ppr/host.hpp"
#include "ppr/io.hpp"
#include "ppr/rng.hpp"

namespace ppr {

std::string adversary_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::UniformRandom: return "uniform";
        case AdversaryKind::AllBlue: return "all-blue";
        case AdversaryKind::AllRed: return "all-red";
        case AdversaryKind::ClusterParity: return "cluster-parity";
        case AdversaryKind::AntiClique: return "anti-clique";
        case AdversaryKind::FileReplay: return "file-replay";
    }
    return "?";
}

AdversaryKind parse_adversary(const std::string& name) {
    for (auto kind : {AdversaryKind::UniformRandom, AdversaryKind::AllBlue, AdversaryKind::AllRed,
                      AdversaryKind::ClusterParity, AdversaryKind::AntiClique,
                      AdversaryKind::FileReplay})
        if (adversary_name(kind) == name) return kind;
    throw std::invalid_argument("unknown adversary: " + name);
}

TwoColoring color_with(const Adversary& adv, const Graph& g, const BlowupMap* map) {
    if (adv.kind == AdversaryKind::FileReplay) {
        if (adv.replay_path.empty())
            throw std::invalid_argument("file-replay adversary needs a coloring file");
        return read_coloring_file(adv.replay_path, g);
    }
    TwoColoring c(g.order);
    Rng rng(adv.seed);
    auto cluster = [&](int v) { return map ? map->cluster_of(v) : v; };
    if (adv.kind == AdversaryKind::AntiClique) {
        // intra-cluster edges: avoid completing monochromatic triangles
        // within the cluster; cross edges: uniform
        for (auto [u, v] : g.edges()) {
            if (cluster(u) != cluster(v)) {
                c.set(u, v, rnd_unit(rng) < 0.5 ? Color::Red : Color::Blue);
                continue;
            }
            int red_closes = 0, blue_closes = 0;
            for (int w : g.adj[u]) {
                if (cluster(w) != cluster(u) || !g.has_edge(v, w)) continue;
                auto cu = c.get(u, w), cv = c.get(v, w);
                if (!cu || !cv || *cu != *cv) continue;
                (*cu == Color::Red ? red_closes : blue_closes)++;
            }
            Color pick;
            if (red_closes != blue_closes)
                pick = red_closes < blue_closes ? Color::Red : Color::Blue;
            else
                pick = rnd_unit(rng) < 0.5 ? Color::Red : Color::Blue;
            c.set(u, v, pick);
        }
        return c;
    }
    for (auto [u, v] : g.edges()) {
        Color col = Color::Red;
        switch (adv.kind) {
            case AdversaryKind::UniformRandom:
                col = rnd_unit(rng) < 0.5 ? Color::Red : Color::Blue;
                break;
            case AdversaryKind::AllBlue:
                col = Color::Blue;
                break;
            case AdversaryKind::AllRed:
                col = Color::Red;
                break;
            case AdversaryKind::ClusterParity:
                col = (cluster(u) % 2 == cluster(v) % 2) ? Color::Blue : Color::Red;
                break;
            default:
                break;
        }
        c.set(u, v, col);
    }
    return c;
}

std::string edge_budget_report(int k, const Graph& host, int cluster_size) {
    std::ostringstream os;
    const long long an = host.order;
    const long long r = cluster_size;
    const int b = host.max_degree();
    Graph hk = graph_power(host, k);
    auto [blown, map] = complete_blowup(hk, cluster_size);
    (void)map;
    // degree-sum bound: |E(H^k)| <= an * (b + b^2 + ... + b^k) / 2
    BigInt degree_sum = 0, bp = 1;
    for (int i = 1; i <= k; ++i) {
        bp *= b;
        degree_sum += bp;
    }
    BigInt ek_bound = (BigInt(an) * degree_sum + 1) / 2;
    BigInt linear_bound = BigInt(r) * r * BigInt(hk.edge_count()) + BigInt(r) * r * an;
    os << "edge-budget k=" << k << " cluster=" << r << " host_order=" << an << " host_max_degree="
       << b << "\n";
    os << "edges_host " << host.edge_count() << "\n";
    os << "edges_host_power " << hk.edge_count() << " bound " << ek_bound << "\n";
    os << "edges_blowup " << blown.edge_count() << " formula "
       << BigInt(r) * r * BigInt(hk.edge_count()) + BigInt(an) * r * (r - 1) / 2 << " linear_bound "
       << linear_bound << "\n";
    os << "linear_coefficient_per_n " << BigRat(linear_bound, std::max(1LL, an)) << "\n";
    return os.str();
}

namespace {

struct TrialFiles {
    std::string host, coloring, report;
};

TrialFiles dump_paths(const std::string& outdir, const std::string& adv, int trial) {
    std::string base = outdir + "/trial-" + adv + "-" + std::to_string(trial);
    return {base + "-host.txt", base + "-coloring.txt", base + "-report.txt"};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.adversaries.empty()) throw std::invalid_argument("no adversaries in the spec");
    if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
    ExperimentResult res;
    std::ostringstream os;
    os << "experiment k=" << spec.k << " n=" << spec.n << " cluster=" << spec.cluster_size
       << " s=" << spec.s << " t=" << spec.t << " trials=" << spec.trials << " seed="
       << spec.master_seed << "\n";

    std::optional<Graph> fixed_host;
    if (!spec.host_file.empty()) fixed_host = read_graph_file(spec.host_file);
    if (!spec.outdir.empty()) std::filesystem::create_directories(spec.outdir);

    // sampled certification scale: sigma = ceil(epsilon * n)
    BigRat en = spec.epsilon * spec.n;
    BigInt sigma_big = (boost::multiprecision::numerator(en) +
                        boost::multiprecision::denominator(en) - 1) /
                       boost::multiprecision::denominator(en);
    const int sigma = std::max(1, static_cast<int>(sigma_big));

    for (std::size_t ai = 0; ai < spec.adversaries.size(); ++ai) {
        const auto kind = spec.adversaries[ai];
        for (int trial = 0; trial < spec.trials; ++trial) {
            const std::uint64_t trial_seed = derive_seed(spec.master_seed, ai, trial);
            ++res.trials_run;

            Graph host;
            int retries = 0;
            if (fixed_host) {
                host = *fixed_host;
            } else {
                for (;;) {
                    auto hs = sample_host(spec.host_a, spec.n, spec.host_c,
                                          derive_seed(trial_seed, 1, retries));
                    host = std::move(hs.host);
                    if (2 * sigma > host.order) break;
                    auto cert = certify_expansion_sampled(host, sigma, spec.cert_trials,
                                                          derive_seed(trial_seed, 2, retries));
                    if (cert.verdict != CertVerdict::Falsified || ++retries >= spec.host_retries)
                        break;
                }
            }

            auto [blown, map] = complete_blowup(graph_power(host, spec.k), spec.cluster_size);
            Adversary adv{kind, derive_seed(trial_seed, 3), ""};
            TwoColoring coloring = color_with(adv, blown, &map);

            SolveConfig cfg;
            cfg.k = spec.k;
            cfg.n = spec.n;
            cfg.s = spec.s;
            cfg.t = spec.t;
            cfg.cluster_size = spec.cluster_size;
            cfg.epsilon = spec.epsilon;
            cfg.lifter = spec.lifter;
            cfg.seed = derive_seed(trial_seed, 4);
            SolveReport rep = solve(host, blown, map, coloring, cfg);

            os << "trial " << adversary_name(kind) << " " << trial << " seed=" << cfg.seed;
            if (rep.success) {
                const bool ok = verify_witness(blown, coloring, rep.witness);
                if (!ok) res.all_emitted_verified = false;
                ++res.witnesses;
                (rep.witness.color == Color::Blue ? res.witnesses_blue : res.witnesses_red)++;
                os << " outcome=witness color=" << color_char(rep.witness.color) << " length="
                   << rep.witness.vertices.size() << " verified=" << (ok ? "yes" : "NO") << "\n";
            } else {
                ++res.failures;
                ++res.failures_by_stage[rep.failed_stage];
                os << " outcome=stage-failure stage=" << rep.failed_stage << " retries=" << retries
                   << "\n";
                if (!spec.outdir.empty()) {
                    auto files = dump_paths(spec.outdir, adversary_name(kind), trial);
                    write_graph_file(host, files.host);
                    write_coloring_file(coloring, blown, files.coloring);
                    std::ofstream rf(files.report);
                    rf << rep.to_string();
                }
            }
        }
    }

    os << "summary trials=" << res.trials_run << " witnesses=" << res.witnesses << " blue="
       << res.witnesses_blue << " red=" << res.witnesses_red << " failures=" << res.failures
       << "\n";
    for (const auto& [stage, count] : res.failures_by_stage)
        os << "stage-failures " << stage << " " << count << "\n";
    os << "verified " << (res.all_emitted_verified ? "all" : "SOME FAILED") << "\n";
    res.report = os.str();
    return res;
}

}  // namespace ppr
