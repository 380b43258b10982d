#pragma once

#include "pgt/plane_graph.hpp"

namespace pgt {

/// Builds a plane graph from its complete face list (every face, outer
/// included, as a boundary walk). Rotations are derived from the walks
/// under the fixed tracing convention; Euler and the walk count are
/// verified, so a bad hand-drawn face list fails loudly.
PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& face_walks);

/// Attaches a pendant path of `len` new vertices at v, inserted into the
/// corner after neighbor `after` in v's rotation. Adds no cycles, so class
/// membership is preserved. Keeps the designated outer face.
PlaneGraph attach_path(const PlaneGraph& g, int v, int after, int len,
                       int* first_new = nullptr);

/// Attaches a pendant triangle (two new vertices) at v in the corner after
/// neighbor `after`. The only new cycle is the triangle itself.
PlaneGraph attach_triangle(const PlaneGraph& g, int v, int after, int* first_new = nullptr);

/// Inserts edge a-b into the face that holds both named corners (the
/// corner after `after_a` at a, and after `after_b` at b). The Euler check
/// rejects corner pairs that do not share a face.
PlaneGraph add_chord(const PlaneGraph& g, int a, int after_a, int b, int after_b);

/// A corner of v that does not lie on the outer face: returns the rotation
/// neighbor `after` which attach_path/attach_triangle can use. Requires an
/// outer face and at least one non-outer corner at v.
int inner_corner_after(const PlaneGraph& g, int v);

}  // namespace pgt
