#include "ppr/lift.hpp"

#include <sstream>

#include "ppr/rng.hpp"
#include "ppr/transversal.hpp"

namespace ppr {

std::optional<MajoritySelection> select_majority_side(const BlowupMap& map,
                                                      const TwoColoring& coloring, int t,
                                                      RamseyStepFailure* failure) {
    MajoritySelection sel;
    sel.assignment.cliques.assign(map.base_order, std::nullopt);
    std::vector<MonoClique> found(map.base_order);
    for (int v = 0; v < map.base_order; ++v) {
        auto mc = find_mono_clique(coloring, map.members_of(v), t);
        if (!mc) {
            if (failure) failure->base_vertex = v;
            return std::nullopt;
        }
        if (mc->color == Color::Blue)
            ++sel.blue_cliques;
        else
            ++sel.red_cliques;
        found[v] = std::move(*mc);
    }
    Color majority = sel.blue_cliques >= sel.red_cliques ? Color::Blue : Color::Red;
    sel.swapped = (majority == Color::Red);
    for (int v = 0; v < map.base_order; ++v)
        if (found[v].color == majority) {
            sel.w.push_back(v);
            sel.assignment.cliques[v] = found[v];
        }
    return sel;
}

DichotomyResult claim_dichotomy(const Graph& f, int k, int n, const TwoColoring& chi_prime,
                                const Graph& f_power, const BigRat& epsilon, const BigRat& a) {
    if (f.order != f_power.order || f.order != chi_prime.order)
        throw std::invalid_argument("f, f_power and chi_prime must agree on the vertex set");
    DichotomyResult res;

    // complete chi' to a coloring of K_{|F|}: absent pairs are red
    TwoColoring completed(f.order);
    for (int u = 0; u < f.order; ++u)
        for (int v = u + 1; v < f.order; ++v)
            completed.set(u, v, f_power.has_edge(u, v) ? chi_prime.at(u, v) : Color::Red);

    auto cov = cover_blue_paths_red_multipartite(completed, k);
    if (!cov.ok) {
        res.kind = DichotomyResult::Kind::Infeasible;
        res.diagnostics = "cover search exhausted";
        return res;
    }
    res.cover = cov.cover;

    const std::vector<int>* longest = nullptr;
    for (const auto& p : res.cover.blue_paths)
        if (!longest || p.size() > longest->size()) longest = &p;
    if (longest && static_cast<int>(longest->size()) >= n) {
        res.kind = DichotomyResult::Kind::BluePath;
        res.path.assign(longest->begin(), longest->begin() + n);
        return res;
    }

    // class size check against ceil(epsilon * a * n)
    BigRat thr = epsilon * a * n;
    BigInt num = boost::multiprecision::numerator(thr), den = boost::multiprecision::denominator(thr);
    BigInt threshold = (num + den - 1) / den;
    for (std::size_t i = 0; i < res.cover.classes.size(); ++i)
        if (BigInt(res.cover.classes[i].size()) < threshold) {
            res.kind = DichotomyResult::Kind::Infeasible;
            res.diagnostics = "class " + std::to_string(i + 1) + " has " +
                              std::to_string(res.cover.classes[i].size()) +
                              " vertices, below the size threshold " + threshold.str();
            return res;
        }

    // the transversal path is searched in f itself, not in f_power
    TransversalInstance inst{f, res.cover.classes, n};
    auto tr = find_transversal_path(inst);
    if (!tr.found) {
        res.kind = DichotomyResult::Kind::Infeasible;
        res.diagnostics = "transversal search failed: " + tr.failure_reason;
        return res;
    }
    res.kind = DichotomyResult::Kind::RedPowerPath;
    res.path = std::move(tr.path);
    return res;
}

namespace {

// All pairs within distance `power` must carry `col` under the (total)
// ambient coloring; coloring presence doubles as the edge test.
bool check_mono_power_sequence(const std::vector<int>& seq, int power, Color col,
                               const TwoColoring& ambient) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size() && j - i <= static_cast<std::size_t>(power); ++j)
            if (ambient.get(seq[i], seq[j]) != col) return false;
    return true;
}

std::vector<std::vector<int>> k_subsets(const std::vector<int>& items, int k) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(items.size());
    if (k > n) return out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        std::vector<int> sub;
        for (int i : comb) sub.push_back(items[i]);
        out.push_back(std::move(sub));
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

// Desk-scale blue lift: one k-block per cluster, consecutive blocks fully
// blue-joined; feasibility decided by a DP along the path.
LiftResult lift_blue_block_chain(const std::vector<int>& path,
                                 const std::vector<std::vector<int>>& clique_members, int k,
                                 const TwoColoring& ambient) {
    LiftResult res;
    const int n = static_cast<int>(path.size());
    std::vector<std::vector<std::vector<int>>> states(n);
    for (int i = 0; i < n; ++i) {
        auto members = clique_members[path[i]];
        std::sort(members.begin(), members.end());
        states[i] = k_subsets(members, k);
        if (states[i].empty()) {
            res.error = "cluster " + std::to_string(i) + " has fewer than k vertices";
            return res;
        }
    }
    auto fully_blue = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int u : a)
            for (int v : b)
                if (ambient.get(u, v) != Color::Blue) return false;
        return true;
    };
    std::vector<std::vector<int>> parent(n);
    std::vector<std::vector<char>> reachable(n);
    reachable[0].assign(states[0].size(), 1);
    for (int i = 1; i < n; ++i) {
        reachable[i].assign(states[i].size(), 0);
        parent[i].assign(states[i].size(), -1);
        for (std::size_t b = 0; b < states[i].size(); ++b)
            for (std::size_t a = 0; a < states[i - 1].size(); ++a)
                if (reachable[i - 1][a] && fully_blue(states[i - 1][a], states[i][b])) {
                    reachable[i][b] = 1;
                    parent[i][b] = static_cast<int>(a);
                    break;
                }
    }
    int last = -1;
    for (std::size_t b = 0; b < states[n - 1].size(); ++b)
        if (reachable[n - 1][b]) {
            last = static_cast<int>(b);
            break;
        }
    if (last < 0) {
        res.error = "no blue block chain through the cluster sequence";
        return res;
    }
    std::vector<int> choice(n);
    choice[n - 1] = last;
    for (int i = n - 1; i > 0; --i) choice[i - 1] = parent[i][choice[i]];
    std::vector<int> seq;
    for (int i = 0; i < n; ++i)
        seq.insert(seq.end(), states[i][choice[i]].begin(), states[i][choice[i]].end());
    if (!check_mono_power_sequence(seq, k, Color::Blue, ambient)) {
        res.error = "block chain construction failed verification";
        return res;
    }
    res.witness = Witness{Color::Blue, k, std::move(seq)};
    return res;
}

}  // namespace

LiftResult lift_blue(const std::vector<int>& blue_path, const TwoColoring& ambient,
                     const std::vector<std::vector<int>>& clique_members, int s, int k) {
    LiftResult res;
    if (blue_path.empty()) {
        res.error = "empty blue path";
        return res;
    }
    const int n = static_cast<int>(blue_path.size());
    if (n == 1) {
        auto members = clique_members[blue_path[0]];
        std::sort(members.begin(), members.end());
        if (static_cast<int>(members.size()) > 2 * k) members.resize(2 * k);
        if (!check_mono_power_sequence(members, k, Color::Blue, ambient)) {
            res.error = "single cluster is not a blue clique";
            return res;
        }
        res.witness = Witness{Color::Blue, k, std::move(members)};
        return res;
    }

    std::size_t min_clique = SIZE_MAX;
    for (int x : blue_path) min_clique = std::min(min_clique, clique_members[x].size());
    if (s < 2 * k || min_clique < static_cast<std::size_t>(2 * k))
        return lift_blue_block_chain(blue_path, clique_members, k, ambient);

    // K_{s,s}-witness construction: one X side and one Y side per cluster.
    std::vector<std::vector<int>> x_side(n), y_side(n);
    for (int i = 0; i + 1 < n; ++i) {
        auto w = has_blue_kss(ambient, clique_members[blue_path[i]],
                              clique_members[blue_path[i + 1]], s);
        if (!w) {
            res.error = "missing blue K_{s,s} witness at path edge " + std::to_string(i);
            return res;
        }
        x_side[i] = std::move(w->left);
        y_side[i + 1] = std::move(w->right);
    }
    std::vector<int> seq = x_side[0];  // X'_1 = X_1, in full
    for (int i = 1; i + 1 < n; ++i) {
        std::vector<int> y_prime(y_side[i].begin(), y_side[i].begin() + k);
        std::vector<int> x_prime;
        for (int v : x_side[i]) {
            if (std::find(y_prime.begin(), y_prime.end(), v) != y_prime.end()) continue;
            x_prime.push_back(v);
            if (static_cast<int>(x_prime.size()) == k) break;
        }
        seq.insert(seq.end(), y_prime.begin(), y_prime.end());
        seq.insert(seq.end(), x_prime.begin(), x_prime.end());
    }
    seq.insert(seq.end(), y_side[n - 1].begin(), y_side[n - 1].end());  // Y'_n = Y_n

    if (!check_mono_power_sequence(seq, k, Color::Blue, ambient)) {
        res.error = "K_{s,s} lift failed verification";
        return res;
    }
    res.witness = Witness{Color::Blue, k, std::move(seq)};
    return res;
}

LiftResult lift_red_greedy(const std::vector<int>& power_path,
                           const std::vector<std::vector<int>>& clique_members, int k,
                           const TwoColoring& ambient, long long budget) {
    LiftResult res;
    const int n = static_cast<int>(power_path.size());
    if (n == 0) {
        res.error = "empty path";
        return res;
    }
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < n; ++i) {
        members[i] = clique_members[power_path[i]];
        std::sort(members[i].begin(), members[i].end());
    }
    std::vector<int> picked(n, -1);  // candidate index per position
    long long spent = 0;
    int i = 0;
    while (i >= 0 && i < n) {
        bool advanced = false;
        for (int ci = picked[i] + 1; ci < static_cast<int>(members[i].size()); ++ci) {
            if (++spent > budget) {
                res.error = "backtracking budget exhausted";
                return res;
            }
            int cand = members[i][ci];
            bool ok = true;
            for (int j = std::max(0, i - k); j < i && ok; ++j)
                ok = ambient.get(members[j][picked[j]], cand) == Color::Red;
            if (ok) {
                picked[i] = ci;
                advanced = true;
                break;
            }
        }
        if (advanced) {
            ++i;
            if (i < n) picked[i] = -1;
        } else {
            picked[i] = -1;
            --i;  // chronological backtrack
        }
    }
    if (i < 0) {
        res.error = "no red representative system exists for this instance";
        return res;
    }
    std::vector<int> seq(n);
    for (int j = 0; j < n; ++j) seq[j] = members[j][picked[j]];
    if (!check_mono_power_sequence(seq, k, Color::Red, ambient)) {
        res.error = "greedy lift failed verification";
        return res;
    }
    res.witness = Witness{Color::Red, k, std::move(seq)};
    return res;
}

LiftResult lift_red_resample(const std::vector<int>& power_path,
                             const std::vector<std::vector<int>>& clique_members, int s, int k,
                             const TwoColoring& ambient, std::uint64_t seed,
                             long long max_rounds) {
    LiftResult res;
    const int n = static_cast<int>(power_path.size());
    if (n == 0) {
        res.error = "empty path";
        return res;
    }
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < n; ++i) {
        members[i] = clique_members[power_path[i]];
        std::sort(members[i].begin(), members[i].end());
    }
    // precondition: no blue K_{s,s} between any pair of clusters within
    // distance k; also measure the realized blue density per pair
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= i + k && j < n; ++j) {
            if (has_blue_kss(ambient, members[i], members[j], s)) {
                res.error = "precondition violated: blue K_{s,s} between clusters " +
                            std::to_string(i) + " and " + std::to_string(j);
                return res;
            }
            long long blue = 0;
            for (int u : members[i])
                for (int v : members[j])
                    if (ambient.get(u, v) == Color::Blue) ++blue;
            double rate = static_cast<double>(blue) /
                          static_cast<double>(members[i].size() * members[j].size());
            res.measured_violation_rate = std::max(res.measured_violation_rate, rate);
        }

    Rng rng(seed);
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i)
        pick[i] = members[i][rnd_below(rng, members[i].size())];
    for (long long round = 0;; ++round) {
        int vi = -1, vj = -1;
        for (int i = 0; i < n && vi < 0; ++i)
            for (int j = i + 1; j <= i + k && j < n; ++j)
                if (ambient.get(pick[i], pick[j]) != Color::Red) {
                    vi = i;
                    vj = j;
                    break;
                }
        if (vi < 0) break;
        if (round >= max_rounds) {
            res.error = "resampling budget exhausted at pair (" + std::to_string(vi) + "," +
                        std::to_string(vj) + ")";
            res.resample_rounds = round;
            return res;
        }
        pick[vi] = members[vi][rnd_below(rng, members[vi].size())];
        pick[vj] = members[vj][rnd_below(rng, members[vj].size())];
        res.resample_rounds = round + 1;
    }
    if (!check_mono_power_sequence(pick, k, Color::Red, ambient)) {
        res.error = "resample lift failed verification";
        return res;
    }
    res.witness = Witness{Color::Red, k, std::move(pick)};
    return res;
}

SolveReport solve(const Graph& host, const Graph& blown, const BlowupMap& map,
                  const TwoColoring& coloring, const SolveConfig& cfg) {
    SolveReport rep;
    auto fail = [&](const std::string& stage, const std::string& why) {
        rep.success = false;
        rep.failed_stage = stage;
        rep.diagnostics = why;
        return rep;
    };

    auto [expected, expected_map] = complete_blowup(graph_power(host, cfg.k), cfg.cluster_size);
    if (!(expected == blown) || expected_map.base_order != map.base_order ||
        expected_map.cluster_size != map.cluster_size)
        return fail("validate", "blown graph is not the blow-up of the host's k-th power");
    if (!coloring.total_on(blown))
        return fail("validate", "coloring is not total on the blown graph");

    RamseyStepFailure rsf;
    auto sel = select_majority_side(map, coloring, cfg.t, &rsf);
    if (!sel)
        return fail("ramsey-step",
                    "no monochromatic K_t in cluster " + std::to_string(rsf.base_vertex));
    rep.blue_cliques = sel->blue_cliques;
    rep.red_cliques = sel->red_cliques;
    rep.swapped = sel->swapped;

    TwoColoring flipped_store;
    const TwoColoring* work = &coloring;
    if (sel->swapped) {
        flipped_store = coloring.flipped();
        work = &flipped_store;
    }

    auto f = induced_subgraph(host, sel->w);
    rep.f_order = f.graph.order;
    Graph f_power = graph_power(f.graph, cfg.k);
    std::vector<std::vector<int>> clique_of_f(f.graph.order);
    for (int i = 0; i < f.graph.order; ++i)
        clique_of_f[i] = sel->assignment.cliques[f.original[i]]->vertices;

    TwoColoring chi = auxiliary_coloring(f_power, *work, clique_of_f, cfg.s);
    for (const auto& [key, col] : chi.colors) {
        (void)key;
        if (col == Color::Blue)
            ++rep.chi_blue;
        else
            ++rep.chi_red;
    }

    BigRat scale_a = BigRat(host.order) / cfg.n;
    auto dich = claim_dichotomy(f.graph, cfg.k, cfg.n, chi, f_power, cfg.epsilon, scale_a);
    for (const auto& p : dich.cover.blue_paths) rep.cover_path_lengths.push_back(p.size());
    for (const auto& cls : dich.cover.classes) rep.cover_class_sizes.push_back(cls.size());
    if (dich.kind == DichotomyResult::Kind::Infeasible)
        return fail("dichotomy", dich.diagnostics);

    LiftResult lift;
    if (dich.kind == DichotomyResult::Kind::BluePath) {
        rep.case_taken = "blue-lift";
        lift = lift_blue(dich.path, *work, clique_of_f, cfg.s, cfg.k);
        if (!lift.witness) return fail("blue-lift", lift.error);
    } else {
        rep.case_taken = "red-lift";
        if (cfg.lifter == Lifter::Greedy)
            lift = lift_red_greedy(dich.path, clique_of_f, cfg.k, *work, cfg.greedy_budget);
        else
            lift = lift_red_resample(dich.path, clique_of_f, cfg.s, cfg.k, *work, cfg.seed,
                                     cfg.resample_max_rounds);
        rep.lifter_rounds = lift.resample_rounds;
        if (!lift.witness) return fail("red-lift", lift.error);
    }

    Witness w = std::move(*lift.witness);
    if (sel->swapped) w.color = flip(w.color);
    if (!verify_witness(blown, coloring, w))
        return fail("verify", "constructed witness failed independent verification");
    rep.success = true;
    rep.witness = std::move(w);
    return rep;
}

std::string SolveReport::to_string() const {
    std::ostringstream os;
    os << "report\n";
    os << "outcome " << (success ? "witness" : "stage-failure " + failed_stage) << "\n";
    if (!diagnostics.empty()) os << "diagnostics " << diagnostics << "\n";
    os << "cliques blue " << blue_cliques << " red " << red_cliques << "\n";
    os << "swapped " << (swapped ? "yes" : "no") << "\n";
    os << "f_order " << f_order << "\n";
    os << "chi_prime blue " << chi_blue << " red " << chi_red << "\n";
    os << "cover_paths";
    for (auto l : cover_path_lengths) os << " " << l;
    os << "\ncover_classes";
    for (auto l : cover_class_sizes) os << " " << l;
    os << "\n";
    if (!case_taken.empty()) os << "case " << case_taken << "\n";
    os << "lifter_rounds " << lifter_rounds << "\n";
    if (success)
        os << "witness_color " << color_char(witness.color) << " length " << witness.vertices.size()
           << "\n";
    return os.str();
}

}  // namespace ppr
