#include "pgt/graph_class.hpp"

#include <algorithm>

#include "pgt/errors.hpp"

namespace pgt {

ClassReport in_class_G(const AdjGraph& g, bool embedded) {
    ClassReport r;
    r.embedding_unverified = !embedded;
    r.five_cycle = find_cycle_of_length(g, 5);
    r.triangle_dist = triangle_distance(g);
    if (r.triangle_dist && *r.triangle_dist == 0) {
        auto tris = triangles(g);
        // Witness: first pair sharing a vertex.
        for (size_t i = 0; i < tris.size() && !r.triangle_pair; ++i)
            for (size_t j = i + 1; j < tris.size() && !r.triangle_pair; ++j) {
                for (int a : tris[i])
                    for (int b : tris[j])
                        if (a == b) {
                            r.triangle_pair = std::make_pair(tris[i], tris[j]);
                            break;
                        }
            }
    }
    bool tri_ok = !r.triangle_dist || *r.triangle_dist >= 1;
    r.in_class = !r.five_cycle && tri_ok;
    return r;
}

ClassReport in_class_G(const PlaneGraph& g) {
    return in_class_G(g.skeleton(), /*embedded=*/true);
}

ClassReport identification_in_G(const AdjGraph& g,
                                const std::vector<std::vector<int>>& parts) {
    auto res = identify(g, parts);
    return in_class_G(res.graph, /*embedded=*/false);
}

SeparatingCycleAudit separating_cycle_audit(const PlaneGraph& g) {
    SeparatingCycleAudit audit;
    for (const auto& c : cycles_up_to(g.skeleton(), 7)) {
        const int len = static_cast<int>(c.size());
        if (len != 3 && len != 4 && len != 7) continue;
        CycleRef ref = classify_cycle(g, c);
        if (!ref.separating()) continue;
        SeparatingCycleFinding f;
        f.cycle = c;
        if (len == 4) {
            // Required shape: ext = {b, c} adjacent, forming a triangle
            // with some cycle vertex.
            if (ref.exterior.size() == 2) {
                int b = ref.exterior[0], cc = ref.exterior[1];
                if (g.skeleton().has_edge(b, cc))
                    for (int v : c)
                        if (g.skeleton().has_edge(v, b) && g.skeleton().has_edge(v, cc)) {
                            f.shape_ok = true;
                            break;
                        }
            }
            audit.four_cycles.push_back(std::move(f));
        } else if (len == 3) {
            audit.triangles.push_back(std::move(f));
        } else {
            audit.seven_cycles.push_back(std::move(f));
        }
    }
    return audit;
}

}  // namespace pgt
