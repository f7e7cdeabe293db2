#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ppr/adversary.hpp"
#include "ppr/constants.hpp"
#include "ppr/graph.hpp"
#include "ppr/host.hpp"
#include "ppr/io.hpp"
#include "ppr/lift.hpp"
#include "ppr/ramsey.hpp"
#include "ppr/transversal.hpp"

namespace {

using namespace ppr;

BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::optional<BigRat> maybe_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_rat(s);
}

std::uint64_t work_bound_from_env() {
    if (const char* env = std::getenv("PPR_WORK_BOUND")) return std::strtoull(env, nullptr, 10);
    return 200'000'000ULL;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"size-Ramsey constructions for powers of paths"};
    app.require_subcommand(1);

    // constants
    auto* c_cmd = app.add_subcommand("constants", "exact constants ledger for a given k");
    int c_k = 2;
    std::string c_eps, c_a, c_graph;
    int c_cluster = 6;
    c_cmd->add_option("--k", c_k)->required();
    c_cmd->add_option("--epsilon", c_eps, "rational override, e.g. 1/9");
    c_cmd->add_option("--a", c_a, "rational override");
    c_cmd->add_option("--graph", c_graph, "also print the edge budget for this host");
    c_cmd->add_option("--cluster-size", c_cluster);

    // gen-host
    auto* gh = app.add_subcommand("gen-host", "sample and prune a pseudo-random host");
    int gh_k = 2;
    long long gh_n = 10;
    std::string gh_a, gh_c, gh_eps, gh_out;
    std::uint64_t gh_seed = 0;
    gh->add_option("--k", gh_k)->required();
    gh->add_option("--n", gh_n)->required();
    gh->add_option("--a", gh_a, "rational; default from the constants ledger");
    gh->add_option("--c", gh_c, "rational; default from the constants ledger");
    gh->add_option("--epsilon", gh_eps, "rational");
    gh->add_option("--seed", gh_seed)->required();
    gh->add_option("--out", gh_out)->required();

    // certify
    auto* ce = app.add_subcommand("certify", "expansion certificate for a graph");
    std::string ce_graph;
    int ce_sigma = 1;
    bool ce_exact = false;
    long long ce_trials = 0;
    std::uint64_t ce_seed = 0;
    ce->add_option("--graph", ce_graph)->required();
    ce->add_option("--sigma", ce_sigma)->required();
    ce->add_flag("--exact", ce_exact);
    ce->add_option("--trials", ce_trials);
    ce->add_option("--seed", ce_seed);

    // power
    auto* pw = app.add_subcommand("power", "k-th graph power");
    std::string pw_graph, pw_out;
    int pw_k = 1;
    pw->add_option("--graph", pw_graph)->required();
    pw->add_option("--k", pw_k)->required();
    pw->add_option("--out", pw_out)->required();

    // blowup
    auto* bl = app.add_subcommand("blowup", "complete blow-up with clusters of a fixed size");
    std::string bl_graph, bl_out;
    int bl_cluster = 1;
    bl->add_option("--graph", bl_graph)->required();
    bl->add_option("--cluster-size", bl_cluster)->required();
    bl->add_option("--out", bl_out)->required();

    // find-clique
    auto* fc = app.add_subcommand("find-clique", "monochromatic K_t in a colored complete graph");
    std::string fc_graph, fc_coloring;
    int fc_t = 3;
    fc->add_option("--graph", fc_graph)->required();
    fc->add_option("--coloring", fc_coloring)->required();
    fc->add_option("--t", fc_t)->required();

    // cover
    auto* cv = app.add_subcommand("cover", "blue paths / red multipartite cover");
    std::string cv_graph, cv_coloring, cv_out;
    int cv_k = 1;
    cv->add_option("--graph", cv_graph)->required();
    cv->add_option("--coloring", cv_coloring)->required();
    cv->add_option("--k", cv_k)->required();
    cv->add_option("--out", cv_out);

    // kst-check
    auto* kc = app.add_subcommand("kst-check", "K_{s,s}-or-edge-bound property of a bipartite graph");
    std::string kc_graph;
    int kc_s = 2;
    kc->add_option("--bipartite", kc_graph)->required();
    kc->add_option("--s", kc_s)->required();

    // embed-path
    auto* ep = app.add_subcommand("embed-path", "transversal path search");
    std::string ep_graph, ep_classes, ep_trace;
    int ep_n = 1;
    ep->add_option("--graph", ep_graph)->required();
    ep->add_option("--classes", ep_classes)->required();
    ep->add_option("--n", ep_n)->required();
    ep->add_option("--trace", ep_trace);

    // color
    auto* co = app.add_subcommand("color", "apply an adversary coloring");
    std::string co_graph, co_adv = "uniform", co_replay, co_out;
    int co_cluster = 0;
    std::uint64_t co_seed = 0;
    co->add_option("--graph", co_graph)->required();
    co->add_option("--adversary", co_adv);
    co->add_option("--seed", co_seed);
    co->add_option("--cluster-size", co_cluster, "enables cluster-aware adversaries");
    co->add_option("--replay", co_replay);
    co->add_option("--out", co_out)->required();

    // solve
    auto* so = app.add_subcommand("solve", "end-to-end monochromatic power-path search");
    std::string so_host, so_coloring, so_report, so_witness, so_eps, so_lifter = "greedy";
    int so_k = 2, so_n = 10, so_cluster = 6, so_s = 2, so_t = 3;
    std::uint64_t so_seed = 0;
    so->add_option("--host", so_host)->required();
    so->add_option("--k", so_k)->required();
    so->add_option("--n", so_n)->required();
    so->add_option("--cluster-size", so_cluster)->required();
    so->add_option("--s", so_s)->required();
    so->add_option("--t", so_t)->required();
    so->add_option("--coloring", so_coloring)->required();
    so->add_option("--lifter", so_lifter)->check(CLI::IsMember({"greedy", "resample"}));
    so->add_option("--seed", so_seed);
    so->add_option("--epsilon", so_eps);
    so->add_option("--report", so_report);
    so->add_option("--witness", so_witness);

    // verify
    auto* ve = app.add_subcommand("verify", "independent witness verification");
    std::string ve_graph, ve_coloring, ve_witness;
    ve->add_option("--graph", ve_graph)->required();
    ve->add_option("--coloring", ve_coloring)->required();
    ve->add_option("--witness", ve_witness)->required();

    // experiment
    auto* ex = app.add_subcommand("experiment", "seeded adversarial campaign");
    ExperimentSpec spec;
    std::string ex_a = "6", ex_c = "1", ex_eps = "1/20", ex_advs = "uniform", ex_lifter = "greedy";
    std::string ex_report;
    ex->add_option("--k", spec.k);
    ex->add_option("--n", spec.n);
    ex->add_option("--cluster-size", spec.cluster_size);
    ex->add_option("--s", spec.s);
    ex->add_option("--t", spec.t);
    ex->add_option("--a", ex_a);
    ex->add_option("--c", ex_c);
    ex->add_option("--epsilon", ex_eps);
    ex->add_option("--host", spec.host_file);
    ex->add_option("--adversaries", ex_advs, "comma-separated list");
    ex->add_option("--trials", spec.trials);
    ex->add_option("--seed", spec.master_seed);
    ex->add_option("--lifter", ex_lifter)->check(CLI::IsMember({"greedy", "resample"}));
    ex->add_option("--outdir", spec.outdir);
    ex->add_option("--report", ex_report);

    CLI11_PARSE(app, argc, argv);

    if (*c_cmd) {
        auto pc = paper_constants(c_k, maybe_rat(c_eps), maybe_rat(c_a));
        std::cout << pc.to_string();
        std::cout << "identity_64k_t 1 " << (local_lemma_identity_holds(pc) ? "holds" : "VIOLATED")
                  << "\n";
        if (!c_graph.empty())
            std::cout << edge_budget_report(c_k, read_graph_file(c_graph), c_cluster);
        return 0;
    }
    if (*gh) {
        auto pc = paper_constants(gh_k, maybe_rat(gh_eps));
        BigRat a = gh_a.empty() ? pc.a : parse_rat(gh_a);
        BigRat c = gh_c.empty() ? pc.c : parse_rat(gh_c);
        auto hs = sample_host(a, gh_n, c, gh_seed);
        write_graph_file(hs.host, gh_out);
        std::cout << "host order " << hs.host.order << " edges " << hs.host.edge_count()
                  << " max_degree " << hs.max_degree << " degree_bound_b " << pc.b << "\n";
        return 0;
    }
    if (*ce) {
        Graph g = read_graph_file(ce_graph);
        ExpansionCertificate cert;
        if (ce_exact)
            cert = certify_expansion_exact(g, ce_sigma, work_bound_from_env());
        else if (ce_trials > 0)
            cert = certify_expansion_sampled(g, ce_sigma, ce_trials, ce_seed);
        else
            throw std::runtime_error("pass --exact or --trials N");
        std::cout << cert.to_string();
        return cert.verdict == CertVerdict::Falsified ? 1 : 0;
    }
    if (*pw) {
        write_graph_file(graph_power(read_graph_file(pw_graph), pw_k), pw_out);
        return 0;
    }
    if (*bl) {
        auto [blown, map] = complete_blowup(read_graph_file(bl_graph), bl_cluster);
        (void)map;
        write_graph_file(blown, bl_out);
        return 0;
    }
    if (*fc) {
        Graph g = read_graph_file(fc_graph);
        TwoColoring c = read_coloring_file(fc_coloring, g);
        std::vector<int> verts(g.order);
        for (int i = 0; i < g.order; ++i) verts[i] = i;
        auto mc = find_mono_clique(c, verts, fc_t);
        if (!mc) {
            std::cout << "not-found\n";
            return 1;
        }
        std::cout << "clique " << color_char(mc->color);
        for (int v : mc->vertices) std::cout << " " << v;
        std::cout << "\n";
        return 0;
    }
    if (*cv) {
        Graph g = read_graph_file(cv_graph);
        TwoColoring c = read_coloring_file(cv_coloring, g);
        auto res = cover_blue_paths_red_multipartite(c, cv_k);
        std::ostringstream os;
        os << "cover " << (res.ok ? "ok" : "search-exhausted") << " paths "
           << res.cover.blue_paths.size() << " max_class " << res.max_class << " min_class "
           << res.min_class << "\n";
        for (const auto& p : res.cover.blue_paths) {
            os << "path";
            for (int v : p) os << " " << v;
            os << "\n";
        }
        for (const auto& cls : res.cover.classes) {
            os << "class";
            for (int v : cls) os << " " << v;
            os << "\n";
        }
        write_text(cv_out, os.str());
        return res.ok ? 0 : 1;
    }
    if (*kc) {
        Graph g = read_graph_file(kc_graph);
        if (g.order % 2 != 0) throw std::runtime_error("bipartite input must have even order");
        bool ok = kst_edge_bound_check(g, g.order / 2, kc_s);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (*ep) {
        TransversalInstance inst{read_graph_file(ep_graph), read_classes_file(ep_classes), ep_n};
        auto res = find_transversal_path(inst, !ep_trace.empty());
        if (!ep_trace.empty()) {
            std::ostringstream os;
            for (const auto& step : res.trace) {
                const char* kind = step.kind == TraceStep::Kind::Start
                                       ? "start"
                                       : step.kind == TraceStep::Kind::Extend ? "extend" : "dead";
                os << kind << " " << step.vertex << "\n";
            }
            write_text(ep_trace, os.str());
        }
        if (res.found) {
            std::cout << "path";
            for (int v : res.path) std::cout << " " << v;
            std::cout << "\n";
            return 0;
        }
        std::cout << "failure " << res.failure_reason << "\n";
        for (std::size_t i = 0; i < res.terminal.dead.size(); ++i)
            std::cout << "class " << i + 1 << " unused " << res.terminal.unused[i].size()
                      << " dead " << res.terminal.dead[i].size() << "\n";
        return 1;
    }
    if (*co) {
        Graph g = read_graph_file(co_graph);
        Adversary adv{parse_adversary(co_adv), co_seed, co_replay};
        BlowupMap map{co_cluster > 0 ? g.order / co_cluster : g.order,
                      co_cluster > 0 ? co_cluster : 1};
        TwoColoring c = color_with(adv, g, co_cluster > 0 ? &map : nullptr);
        write_coloring_file(c, g, co_out);
        return 0;
    }
    if (*so) {
        Graph host = read_graph_file(so_host);
        auto [blown, map] = complete_blowup(graph_power(host, so_k), so_cluster);
        TwoColoring c = read_coloring_file(so_coloring, blown);
        SolveConfig cfg;
        cfg.k = so_k;
        cfg.n = so_n;
        cfg.s = so_s;
        cfg.t = so_t;
        cfg.cluster_size = so_cluster;
        cfg.lifter = so_lifter == "resample" ? Lifter::Resample : Lifter::Greedy;
        cfg.seed = so_seed;
        if (auto e = maybe_rat(so_eps)) cfg.epsilon = *e;
        SolveReport rep = solve(host, blown, map, c, cfg);
        write_text(so_report, rep.to_string());
        if (rep.success && !so_witness.empty()) write_witness_file(rep.witness, so_witness);
        return rep.success ? 0 : 1;
    }
    if (*ve) {
        Graph g = read_graph_file(ve_graph);
        TwoColoring c = read_coloring_file(ve_coloring, g);
        Witness w = read_witness_file(ve_witness);
        bool ok = verify_witness(g, c, w);
        std::cout << (ok ? "valid" : "INVALID") << "\n";
        return ok ? 0 : 1;
    }
    if (*ex) {
        spec.host_a = parse_rat(ex_a);
        spec.host_c = parse_rat(ex_c);
        spec.epsilon = parse_rat(ex_eps);
        spec.lifter = ex_lifter == "resample" ? Lifter::Resample : Lifter::Greedy;
        std::stringstream advs(ex_advs);
        std::string name;
        while (std::getline(advs, name, ',')) spec.adversaries.push_back(parse_adversary(name));
        auto res = run_experiment(spec);
        write_text(ex_report, res.report);
        return res.all_emitted_verified ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
