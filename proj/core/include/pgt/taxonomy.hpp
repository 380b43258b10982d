#pragma once

#include <vector>

#include "pgt/plane_graph.hpp"

namespace pgt {

/// How a face meets the precolored outer cycle: |b(f) ∩ C0| = 0, 1, 2,
/// three-or-more, or the outer face itself.
enum class FClass { internal, one, two, heavy, outer };

struct DegSpec {
    int k;
    enum Mode { exact, at_least, at_most } mode = exact;
    bool ok(int d) const {
        switch (mode) {
            case exact: return d == k;
            case at_least: return d >= k;
            case at_most: return d <= k;
        }
        return false;
    }
};

inline DegSpec deg(int k) { return {k, DegSpec::exact}; }
inline DegSpec deg_plus(int k) { return {k, DegSpec::at_least}; }
inline DegSpec deg_minus(int k) { return {k, DegSpec::at_most}; }

using FacePattern = std::vector<DegSpec>;

struct VertexTax {
    int degree = 0;
    bool on_c0 = false;
    bool triangle_incident = false;         // lies on some 3-cycle of g
    bool facial_triangle_incident = false;  // incident to a 3-face
    std::vector<int> faces;                 // distinct incident faces, ascending
    int f4_internal = 0;                    // incident 4-faces with b(f) ∩ C0 = ∅
    bool poor = false;                      // internal 4-/5-vertex, all corners F4 4-faces
    std::vector<int> pendant3_f3;           // pendant 3-faces from F3
    std::vector<int> pendant3_any;          // all pendant 3-faces
};

struct FaceTax {
    FClass fclass = FClass::internal;
    // The §4 bullet taxonomy, evaluated for internal 4-faces.
    bool special_3445 = false;  // (3,4,4,5), no 4-vertex on a triangle
    bool weak_3445 = false;     // (3,4,4,5), exactly one 4-vertex on a triangle
    bool special_multi5 = false;  // the poor-vertex patterns paid 3/4
    bool rich = false;            // two rich 5-vertices or 6+-vertices
    bool special() const { return special_3445 || special_multi5; }
};

struct Taxonomy {
    std::vector<VertexTax> vert;
    std::vector<FaceTax> face;
    int c0 = -1;                 // outer face id
    std::vector<int> c0_verts;   // sorted
    int t2 = 0, t3 = 0, t4 = 0;  // 2-/3-/4-vertices on C0

    bool internal(int v) const { return !vert[v].on_c0; }
    bool rich_vertex(int v) const {
        return (vert[v].degree == 4 || vert[v].degree == 5) && internal(v) && !vert[v].poor;
    }
};

/// Full per-face and per-vertex classification. Requires the outer face.
Taxonomy classify(const PlaneGraph& g);

/// Matches the face's boundary walk against a cyclic degree pattern, up to
/// rotation and reflection. When anchor >= 0 the anchor vertex must sit at
/// a position whose constraint its own degree satisfies; e.g. (3,4,5,4)
/// anchored at a 5-vertex forces that vertex's face-neighbors to be the
/// two 4s.
bool face_matches(const PlaneGraph& g, int face_id, const FacePattern& pat, int anchor = -1);

/// At most one of two rotation-opposite neighbors of the 4-vertex v lies
/// on a triangle. a and b must be opposite in v's rotation.
bool behaved_pair(const PlaneGraph& g, const Taxonomy& tax, int v, int a, int b);

}  // namespace pgt
