#include "ppr/transversal.hpp"

#include <stdexcept>

namespace ppr {

namespace {

void validate_instance(const TransversalInstance& inst) {
    if (inst.target_length < 1) throw std::invalid_argument("target_length must be >= 1");
    if (inst.classes.empty()) throw std::invalid_argument("classes must be nonempty");
    std::vector<char> seen(inst.host.order, 0);
    for (const auto& cls : inst.classes)
        for (int v : cls) {
            inst.host.check_vertex(v);
            if (seen[v]) throw std::invalid_argument("classes must be pairwise disjoint");
            seen[v] = 1;
        }
}

// Membership-indexed view of the partition U_i / D_i / V(P) ∩ A_i.
struct Bookkeeping {
    int num_classes;
    std::vector<int> class_of;       // vertex -> class, -1 if in no class
    std::vector<char> in_unused;     // vertex flags
    std::vector<std::vector<int>> unused_sorted;
    std::vector<std::vector<int>> dead_sorted;

    explicit Bookkeeping(const TransversalInstance& inst)
        : num_classes(static_cast<int>(inst.classes.size())),
          class_of(inst.host.order, -1),
          in_unused(inst.host.order, 0),
          unused_sorted(inst.classes.size()),
          dead_sorted(inst.classes.size()) {
        for (int i = 0; i < num_classes; ++i) {
            unused_sorted[i] = inst.classes[i];
            std::sort(unused_sorted[i].begin(), unused_sorted[i].end());
            for (int v : unused_sorted[i]) {
                class_of[v] = i;
                in_unused[v] = 1;
            }
        }
    }

    void take(int v) {
        in_unused[v] = 0;
        auto& u = unused_sorted[class_of[v]];
        u.erase(std::lower_bound(u.begin(), u.end(), v));
    }

    void bury(int v) {
        auto& d = dead_sorted[class_of[v]];
        d.insert(std::lower_bound(d.begin(), d.end(), v), v);
    }
};

DfsState snapshot(const Bookkeeping& bk, const std::vector<int>& path) {
    return DfsState{bk.unused_sorted, bk.dead_sorted, path};
}

}  // namespace

TransversalResult find_transversal_path(const TransversalInstance& inst, bool record_trace) {
    validate_instance(inst);
    const int n = inst.target_length;
    const int m = static_cast<int>(inst.classes.size());
    Bookkeeping bk(inst);
    TransversalResult res;
    std::vector<int> path;

    auto fail = [&](const std::string& why) {
        res.found = false;
        res.failure_reason = why;
        res.terminal = snapshot(bk, path);
        return res;
    };

    for (;;) {
        for (int i = 0; i < m; ++i)
            if (2 * static_cast<int>(bk.dead_sorted[i].size()) >
                static_cast<int>(inst.classes[i].size()))
                return fail("dead-end set exceeded half of class " + std::to_string(i + 1));
        if (bk.unused_sorted[0].empty())
            return fail("no unused vertex left in class 1");

        int x1 = bk.unused_sorted[0].front();
        bk.take(x1);
        path.assign(1, x1);
        if (record_trace) res.trace.push_back({TraceStep::Kind::Start, x1});

        while (!path.empty() && static_cast<int>(path.size()) < n) {
            const int r = static_cast<int>(path.size());
            const int next_class = r % m;
            int chosen = -1;
            for (int u : inst.host.adj[path.back()])
                if (bk.in_unused[u] && bk.class_of[u] == next_class) {
                    chosen = u;  // adjacency lists are sorted: smallest id
                    break;
                }
            if (chosen >= 0) {
                bk.take(chosen);
                path.push_back(chosen);
                if (record_trace) res.trace.push_back({TraceStep::Kind::Extend, chosen});
            } else {
                int x = path.back();
                path.pop_back();
                bk.bury(x);
                if (record_trace) res.trace.push_back({TraceStep::Kind::DeadEnd, x});
            }
        }
        if (static_cast<int>(path.size()) == n) {
            res.found = true;
            res.path = path;
            return res;
        }
    }
}

std::vector<DfsState> replay_trace(const TransversalInstance& inst,
                                   const std::vector<TraceStep>& trace) {
    validate_instance(inst);
    const int m = static_cast<int>(inst.classes.size());
    Bookkeeping bk(inst);
    std::vector<int> path;
    std::vector<DfsState> states;
    states.push_back(snapshot(bk, path));

    for (const auto& step : trace) {
        const int v = step.vertex;
        if (v < 0 || v >= inst.host.order || bk.class_of[v] < 0)
            throw std::invalid_argument("trace vertex does not belong to the instance");
        switch (step.kind) {
            case TraceStep::Kind::Start:
                if (!path.empty() || !bk.in_unused[v] || bk.class_of[v] != 0)
                    throw std::invalid_argument("invalid Start step");
                bk.take(v);
                path.assign(1, v);
                break;
            case TraceStep::Kind::Extend: {
                if (path.empty() || !bk.in_unused[v])
                    throw std::invalid_argument("invalid Extend step");
                if (bk.class_of[v] != static_cast<int>(path.size()) % m)
                    throw std::invalid_argument("Extend step breaks the class pattern");
                if (!inst.host.has_edge(path.back(), v))
                    throw std::invalid_argument("Extend step uses a non-edge");
                bk.take(v);
                path.push_back(v);
                break;
            }
            case TraceStep::Kind::DeadEnd:
                if (path.empty() || path.back() != v)
                    throw std::invalid_argument("invalid DeadEnd step");
                path.pop_back();
                bk.bury(v);
                break;
        }
        states.push_back(snapshot(bk, path));
    }
    return states;
}

}  // namespace ppr
