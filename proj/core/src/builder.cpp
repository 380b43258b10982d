#include "pgt/builder.hpp"

#include <algorithm>
#include <map>

#include "pgt/errors.hpp"

namespace pgt {

PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& face_walks) {
    // Walk ... u -> v -> w ... means: at v, w follows u in clockwise order.
    std::vector<std::map<int, int>> succ(n);
    for (const auto& walk : face_walks) {
        check_arg(!walk.empty() || n == 1, "empty face walk");
        const size_t k = walk.size();
        for (size_t i = 0; i < k; ++i) {
            int u = walk[i], v = walk[(i + 1) % k], w = walk[(i + 2) % k];
            check_arg(v >= 0 && v < n, "face walk vertex out of range");
            auto [it, fresh] = succ[v].emplace(u, w);
            check_arg(fresh, "directed edge used twice in face list");
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            check_arg(it != succ[v].end(), "face list does not close around vertex " +
                                               std::to_string(v));
            cur = it->second;
        } while (cur != start && rot[v].size() <= succ[v].size());
        check_arg(rot[v].size() == succ[v].size(),
                  "rotation at vertex " + std::to_string(v) + " is not a single cycle");
    }
    PlaneGraph g = PlaneGraph::from_rotation(rot);
    check_arg(g.faces().size() == face_walks.size(),
              "traced face count differs from the face list");
    return g;
}

namespace {

PlaneGraph rebuild_keeping_outer(const PlaneGraph& g, std::vector<std::vector<int>> rot) {
    std::vector<int> outer_walk;
    if (g.has_outer()) outer_walk = g.outer_face().walk;
    PlaneGraph out = PlaneGraph::from_rotation(std::move(rot));
    if (!outer_walk.empty()) out.set_outer_walk(outer_walk);
    out.set_precolors(std::vector<std::pair<int, int>>(g.precolors()));
    return out;
}

void insert_after(std::vector<int>& r, int after, int value) {
    auto it = std::find(r.begin(), r.end(), after);
    check_arg(it != r.end(), "corner anchor is not a neighbor");
    r.insert(it + 1, value);
}

}  // namespace

PlaneGraph attach_path(const PlaneGraph& g, int v, int after, int len, int* first_new) {
    check_arg(len >= 1, "path length must be positive");
    auto rot = g.rotation();
    int base = g.n();
    insert_after(rot[v], after, base);
    for (int i = 0; i < len; ++i) {
        std::vector<int> r;
        r.push_back(i == 0 ? v : base + i - 1);
        if (i + 1 < len) r.push_back(base + i + 1);
        rot.push_back(std::move(r));
    }
    if (first_new) *first_new = base;
    return rebuild_keeping_outer(g, std::move(rot));
}

PlaneGraph attach_triangle(const PlaneGraph& g, int v, int after, int* first_new) {
    auto rot = g.rotation();
    int t1 = g.n(), t2 = g.n() + 1;
    // Clockwise at v the pair reads (t2, t1); with rot(t1) = [v, t2] and
    // rot(t2) = [t1, v] the triangle traces as the face (v, t1, t2).
    insert_after(rot[v], after, t1);
    insert_after(rot[v], after, t2);
    rot.push_back({v, t2});
    rot.push_back({t1, v});
    if (first_new) *first_new = t1;
    return rebuild_keeping_outer(g, std::move(rot));
}

PlaneGraph add_chord(const PlaneGraph& g, int a, int after_a, int b, int after_b) {
    check_arg(a != b, "chord endpoints must differ");
    auto rot = g.rotation();
    insert_after(rot[a], after_a, b);
    insert_after(rot[b], after_b, a);
    return rebuild_keeping_outer(g, std::move(rot));
}

int inner_corner_after(const PlaneGraph& g, int v) {
    int outer = g.outer();
    for (int i = 0; i < g.degree(v); ++i)
        if (g.corner_face(v, i) != outer) return g.rot(v)[i];
    throw ArgError("vertex has no inner corner");
}

}  // namespace pgt
