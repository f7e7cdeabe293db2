#include "ppr/host.hpp"

#include <sstream>

#include "ppr/rng.hpp"

namespace ppr {

PruneResult degree_prune(const Graph& g, int target_order) {
    if (target_order < 0 || target_order > g.order)
        throw std::invalid_argument("target_order must be in [0, order]");
    std::vector<char> alive(g.order, 1);
    std::vector<int> deg(g.order);
    for (int v = 0; v < g.order; ++v) deg[v] = g.degree(v);
    for (int remaining = g.order; remaining > target_order; --remaining) {
        int best = -1;
        for (int v = 0; v < g.order; ++v)
            if (alive[v] && (best == -1 || deg[v] > deg[best] || (deg[v] == deg[best] && v > best)))
                best = v;
        alive[best] = 0;
        for (int u : g.adj[best])
            if (alive[u]) --deg[u];
    }
    std::vector<int> kept;
    for (int v = 0; v < g.order; ++v)
        if (alive[v]) kept.push_back(v);
    auto sub = induced_subgraph(g, kept);
    return {std::move(sub.graph), std::move(sub.original)};
}

HostSample sample_host(const BigRat& a, long long n, const BigRat& c, std::uint64_t seed) {
    BigRat total = BigRat(2) * a * n;
    BigRat target = a * n;
    if (boost::multiprecision::denominator(total) != 1 ||
        boost::multiprecision::denominator(target) != 1)
        throw std::invalid_argument("2an and an must be integers");
    if (target < 1) throw std::invalid_argument("an must be >= 1");
    BigRat prob = c / n;
    if (prob < 0 || prob > 1) throw std::invalid_argument("edge probability c/n must be in [0, 1]");
    const long long big = static_cast<long long>(boost::multiprecision::numerator(total));
    const long long small = static_cast<long long>(boost::multiprecision::numerator(target));
    const double p = static_cast<double>(prob);

    HostSample out;
    out.sampled = Graph(static_cast<int>(big));
    Rng rng(seed);
    for (int u = 0; u < big; ++u)
        for (int v = u + 1; v < big; ++v)
            if (rnd_unit(rng) < p) out.sampled.add_edge(u, v);
    auto pruned = degree_prune(out.sampled, static_cast<int>(small));
    out.host = std::move(pruned.graph);
    out.kept = std::move(pruned.kept);
    out.max_degree = out.host.max_degree();
    return out;
}

namespace {

// Work estimate C(n, sigma) * n, saturating.
std::uint64_t exact_work(int n, int sigma, std::uint64_t cap) {
    BigInt binom = 1;
    for (int i = 0; i < sigma; ++i) {
        binom *= (n - i);
        binom /= (i + 1);
        if (binom > cap) return cap + 1;
    }
    binom *= n;
    if (binom > cap) return cap + 1;
    return static_cast<std::uint64_t>(binom);
}

}  // namespace

bool recheck_counterexample(const Graph& h, const ExpansionCertificate& cert) {
    if (!cert.counterexample) return false;
    const auto& [s, t] = *cert.counterexample;
    if (static_cast<int>(s.size()) < cert.sigma || static_cast<int>(t.size()) < cert.sigma)
        return false;
    std::vector<char> in_s(h.order, 0);
    for (int v : s) {
        if (v < 0 || v >= h.order || in_s[v]) return false;
        in_s[v] = 1;
    }
    std::vector<char> in_t(h.order, 0);
    for (int v : t) {
        if (v < 0 || v >= h.order || in_s[v] || in_t[v]) return false;
        in_t[v] = 1;
    }
    for (int u : s)
        for (int v : h.adj[u])
            if (in_t[v]) return false;
    return true;
}

ExpansionCertificate certify_expansion_exact(const Graph& h, int sigma, std::uint64_t work_bound) {
    if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
    if (2 * sigma > h.order) throw std::invalid_argument("2*sigma must not exceed the order");
    if (exact_work(h.order, sigma, work_bound) > work_bound)
        throw WorkBoundExceeded("exact expansion certification exceeds the work bound");

    ExpansionCertificate cert;
    cert.mode = CertMode::Exact;
    cert.sigma = sigma;

    const int n = h.order;
    std::vector<int> comb(sigma);
    for (int i = 0; i < sigma; ++i) comb[i] = i;
    std::vector<char> blocked(n);
    for (;;) {
        // blocked = S union N(S); any sigma vertices outside it form a T.
        std::fill(blocked.begin(), blocked.end(), 0);
        for (int u : comb) {
            blocked[u] = 1;
            for (int v : h.adj[u]) blocked[v] = 1;
        }
        std::vector<int> rest;
        for (int v = 0; v < n && static_cast<int>(rest.size()) < sigma; ++v)
            if (!blocked[v]) rest.push_back(v);
        if (static_cast<int>(rest.size()) >= sigma) {
            cert.verdict = CertVerdict::Falsified;
            cert.counterexample = {comb, rest};
            return cert;
        }
        // next combination
        int i = sigma - 1;
        while (i >= 0 && comb[i] == n - sigma + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < sigma; ++j) comb[j] = comb[j - 1] + 1;
    }
    cert.verdict = CertVerdict::Certified;
    return cert;
}

ExpansionCertificate certify_expansion_sampled(const Graph& h, int sigma, long long trials,
                                               std::uint64_t seed) {
    if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
    if (2 * sigma > h.order) throw std::invalid_argument("2*sigma must not exceed the order");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    ExpansionCertificate cert;
    cert.mode = CertMode::Sampled;
    cert.sigma = sigma;
    cert.trials = trials;

    Rng rng(seed);
    std::vector<int> ids(h.order);
    std::vector<char> in_s(h.order);
    for (long long trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < h.order; ++i) ids[i] = i;
        // partial Fisher-Yates: first 2*sigma entries are a uniform sample
        for (int i = 0; i < 2 * sigma; ++i) {
            auto j = i + static_cast<int>(rnd_below(rng, static_cast<std::uint64_t>(h.order - i)));
            std::swap(ids[i], ids[j]);
        }
        std::fill(in_s.begin(), in_s.end(), 0);
        for (int i = 0; i < sigma; ++i) in_s[ids[i]] = 1;
        bool crossing = false;
        for (int i = sigma; i < 2 * sigma && !crossing; ++i)
            for (int u : h.adj[ids[i]])
                if (in_s[u]) {
                    crossing = true;
                    break;
                }
        if (!crossing) {
            cert.verdict = CertVerdict::Falsified;
            std::vector<int> s(ids.begin(), ids.begin() + sigma);
            std::vector<int> t(ids.begin() + sigma, ids.begin() + 2 * sigma);
            std::sort(s.begin(), s.end());
            std::sort(t.begin(), t.end());
            cert.counterexample = {std::move(s), std::move(t)};
            cert.trials = trial + 1;
            return cert;
        }
    }
    cert.verdict = CertVerdict::Unfalsified;
    return cert;
}

std::string ExpansionCertificate::to_string() const {
    std::ostringstream os;
    os << "certificate\n";
    os << "mode " << (mode == CertMode::Exact ? "exact" : "sampled") << "\n";
    os << "sigma " << sigma << "\n";
    os << "verdict "
       << (verdict == CertVerdict::Certified
               ? "certified"
               : verdict == CertVerdict::Falsified ? "falsified" : "unfalsified")
       << "\n";
    if (mode == CertMode::Sampled) os << "trials " << trials << "\n";
    if (counterexample) {
        os << "S";
        for (int v : counterexample->first) os << " " << v;
        os << "\nT";
        for (int v : counterexample->second) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace ppr
