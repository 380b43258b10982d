#pragma once

#include <optional>
#include <vector>

#include "pgt/graph.hpp"
#include "pgt/plane_graph.hpp"

namespace pgt {

/// Membership report for the class of plane graphs with pairwise
/// vertex-disjoint triangles and no 5-cycles.
struct ClassReport {
    bool in_class = false;
    std::optional<std::vector<int>> five_cycle;            // witness if any
    std::optional<std::pair<Triangle, Triangle>> triangle_pair;  // witness at distance 0
    std::optional<int> triangle_dist;                      // nullopt = fewer than 2 triangles
    /// Set when the argument was an abstract graph: the cycle conditions
    /// were checked but nobody vouched for planarity.
    bool embedding_unverified = false;
};

ClassReport in_class_G(const AdjGraph& g, bool embedded);
ClassReport in_class_G(const PlaneGraph& g);

/// identify() followed by the membership check on the abstract result.
/// Used by the reducibility oracles to validate a reduction before
/// coloring. Errors from identify (loops, overlap) propagate.
ClassReport identification_in_G(const AdjGraph& g, const std::vector<std::vector<int>>& parts);

struct SeparatingCycleFinding {
    std::vector<int> cycle;
    /// For separating 4-cycles: whether the exterior has exactly two
    /// vertices b,c forming a triangle v_i b c with a cycle vertex.
    bool shape_ok = false;
};

struct SeparatingCycleAudit {
    std::vector<SeparatingCycleFinding> triangles;    // separating 3-cycles
    std::vector<SeparatingCycleFinding> four_cycles;  // separating 4-cycles
    std::vector<SeparatingCycleFinding> seven_cycles; // separating 7-cycles
    bool unique_four_cycle() const { return four_cycles.size() <= 1; }
};

/// Lists all separating 3-, 4- and 7-cycles relative to the designated
/// outer face, and checks each separating 4-cycle against the required
/// exterior shape.
SeparatingCycleAudit separating_cycle_audit(const PlaneGraph& g);

}  // namespace pgt
