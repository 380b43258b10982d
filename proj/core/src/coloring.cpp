#include "pgt/coloring.hpp"

#include <algorithm>

#include "pgt/errors.hpp"
#include "pgt/plane_graph.hpp"

namespace pgt {

int defect(const AdjGraph& g, const Coloring& col, int v) {
    if (col[v] == 0) return 0;
    int d = 0;
    for (int u : g.neighbors(v))
        if (col[u] == col[v]) ++d;
    return d;
}

std::vector<CapViolation> verify(const AdjGraph& g, const Coloring& col,
                                 const ColoringSpec& spec) {
    check_arg(static_cast<int>(col.size()) == g.n(), "coloring size mismatch");
    std::vector<CapViolation> out;
    for (int v = 0; v < g.n(); ++v) {
        if (col[v] == 0) continue;
        int d = defect(g, col, v);
        if (d > spec.cap(col[v])) out.push_back({v, d, spec.cap(col[v])});
    }
    return out;
}

bool is_properly_colored(const AdjGraph& g, const Coloring& col, int v) {
    check_arg(col[v] != 0, "vertex is uncolored");
    return defect(g, col, v) == 0;
}

bool is_nicely_colored(const AdjGraph& g, const Coloring& col, int v,
                       const ColoringSpec& spec) {
    check_arg(col[v] != 0, "vertex is uncolored");
    int bound = std::max(spec.cap(col[v]) - 1, 0);
    return defect(g, col, v) <= bound;
}

namespace {

struct Solver {
    const AdjGraph& g;
    const ColoringSpec& spec;
    const std::vector<char>& pinned_mask;
    const Coloring& pinned;
    const std::vector<char>& frontier;
    std::vector<int> color;
    std::vector<int> def;  // same-color colored neighbors per colored vertex
    std::vector<int> order;
    SolveStats stats;

    bool feasible(int v, int c) const {
        if (frontier[v])
            for (int u : g.neighbors(v))
                if (pinned_mask[u] && pinned[u] == c) return false;
        int cnt = 0;
        for (int u : g.neighbors(v)) {
            if (color[u] != c) continue;
            ++cnt;
            if (def[u] + 1 > spec.cap(c)) return false;
        }
        return cnt <= spec.cap(c);
    }

    bool vertex_has_option(int w) const {
        for (int c = 1; c <= 3; ++c)
            if (feasible(w, c)) return true;
        return false;
    }

    bool dfs(size_t idx) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, static_cast<int>(idx));
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int c = 1; c <= 3; ++c) {
            if (!feasible(v, c)) continue;
            color[v] = c;
            std::vector<int> bumped;
            for (int u : g.neighbors(v))
                if (color[u] == c && u != v) {
                    ++def[u];
                    bumped.push_back(u);
                }
            def[v] = static_cast<int>(bumped.size());

            // Budget pruning: an uncolored vertex near the assignment that
            // lost its last option kills the branch.
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (color[u] == 0 && !vertex_has_option(u)) {
                    dead = true;
                    break;
                }
            }
            if (!dead)
                for (int u : bumped) {
                    for (int w : g.neighbors(u))
                        if (color[w] == 0 && !vertex_has_option(w)) {
                            dead = true;
                            break;
                        }
                    if (dead) break;
                }

            if (!dead && dfs(idx + 1)) return true;
            for (int u : bumped) --def[u];
            def[v] = 0;
            color[v] = 0;
        }
        return false;
    }
};

}  // namespace

SolveResult solve(const AdjGraph& g, const ColoringSpec& spec, const Coloring& pinned,
                  const std::vector<char>& frontier) {
    const int n = g.n();
    check_arg(static_cast<int>(pinned.size()) == n, "pinned coloring size mismatch");
    check_arg(static_cast<int>(frontier.size()) == n, "frontier mask size mismatch");
    for (int v = 0; v < n; ++v)
        check_arg(pinned[v] >= 0 && pinned[v] <= 3, "pinned color out of range");

    std::vector<char> pinned_mask(n, 0);
    for (int v = 0; v < n; ++v) pinned_mask[v] = pinned[v] != 0;

    // Precondition: the pinned assignment is valid on its induced subgraph.
    for (int v = 0; v < n; ++v) {
        if (!pinned_mask[v]) continue;
        int d = 0;
        for (int u : g.neighbors(v))
            if (pinned_mask[u] && pinned[u] == pinned[v]) ++d;
        check_arg(d <= spec.cap(pinned[v]), "pinned assignment invalid on vertex " +
                                                std::to_string(v));
    }

    SolveResult res;
    // A pinned frontier vertex clashing with a pinned neighbor makes the
    // instance unsatisfiable outright (not a precondition failure).
    for (int v = 0; v < n; ++v) {
        if (!pinned_mask[v] || !frontier[v]) continue;
        for (int u : g.neighbors(v))
            if (pinned_mask[u] && pinned[u] == pinned[v]) {
                res.sat = false;
                return res;
            }
    }

    Solver s{g, spec, pinned_mask, pinned, frontier, pinned, {}, {}, {}};
    s.def.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (pinned[v] != 0) s.def[v] = defect(g, pinned, v);
    for (int v = 0; v < n; ++v)
        if (!pinned_mask[v]) s.order.push_back(v);

    bool sat = s.dfs(0);
    res.sat = sat;
    res.stats = s.stats;
    if (sat) {
        res.coloring = s.color;
        check_internal(verify(g, res.coloring, spec).empty(),
                       "solver produced an invalid coloring");
    }
    return res;
}

SolveResult solve(const AdjGraph& g, const ColoringSpec& spec) {
    return solve(g, spec, Coloring(g.n(), 0), std::vector<char>(g.n(), 0));
}

std::vector<Coloring> boundary_colorings(int len, const ColoringSpec& spec) {
    check_arg(len >= 3, "boundary must be a cycle of length >= 3");
    AdjGraph cyc(len);
    for (int i = 0; i < len; ++i) cyc.add_edge(i, (i + 1) % len);
    std::vector<Coloring> out;
    Coloring col(len, 1);
    while (true) {
        if (verify(cyc, col, spec).empty()) out.push_back(col);
        int i = len - 1;
        while (i >= 0 && col[i] == 3) col[i--] = 1;
        if (i < 0) break;
        ++col[i];
    }
    return out;
}

SuperextendReport check_superextendable(const AdjGraph& g, const std::vector<int>& cycle,
                                        const ColoringSpec& spec, bool keep_outcomes) {
    check_arg(is_cycle_of(g, cycle), "c0 is not a simple cycle of the graph");
    const int n = g.n();
    std::vector<char> on_c0(n, 0);
    for (int v : cycle) on_c0[v] = 1;
    std::vector<char> frontier(n, 0);
    for (int v = 0; v < n; ++v) {
        if (on_c0[v]) continue;
        for (int u : g.neighbors(v))
            if (on_c0[u]) {
                frontier[v] = 1;
                break;
            }
    }

    SuperextendReport rep;
    auto boundaries = boundary_colorings(static_cast<int>(cycle.size()), spec);
    rep.total = static_cast<int>(boundaries.size());
    rep.superextendable = true;
    for (const auto& b : boundaries) {
        Coloring pinned(n, 0);
        for (size_t i = 0; i < cycle.size(); ++i) pinned[cycle[i]] = b[i];
        SolveResult r = solve(g, spec, pinned, frontier);
        rep.stats.nodes += r.stats.nodes;
        rep.stats.max_depth = std::max(rep.stats.max_depth, r.stats.max_depth);
        if (r.sat)
            ++rep.passed;
        else
            rep.superextendable = false;
        if (keep_outcomes) rep.outcomes.push_back({b, r.sat});
    }
    return rep;
}

}  // namespace pgt
