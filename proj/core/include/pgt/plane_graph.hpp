#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pgt/graph.hpp"

namespace pgt {

struct Face {
    int id = -1;
    /// Cyclic vertex sequence of the boundary walk; walk[i] -> walk[i+1]
    /// (indices mod degree) are the directed boundary edges.
    std::vector<int> walk;
    /// b(f): the set of vertices on the walk, sorted and deduplicated.
    std::vector<int> verts;

    int degree() const { return static_cast<int>(walk.size()); }
    bool simple() const { return walk.size() == verts.size(); }
    bool contains(int v) const;
};

/// Connected simple plane graph given as a rotation system (clockwise
/// neighbor order per vertex). Faces are traced eagerly at construction;
/// the Euler check V - E + F = 2 is the acceptance gate for inputs.
///
/// Face-tracing convention, fixed and test-pinned: arriving at v along
/// edge (u,v), the walk continues to the neighbor immediately after u in
/// v's clockwise rotation. Face ids follow first-touch order scanning
/// directed edges (v, rot(v)[i]) with v ascending, i ascending.
class PlaneGraph {
public:
    static PlaneGraph from_rotation(std::vector<std::vector<int>> rot);

    int n() const { return static_cast<int>(rot_.size()); }
    int m() const { return m_; }
    int sigma() const { return n() + m_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& rot(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    const AdjGraph& skeleton() const { return skel_; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }

    /// Face on whose boundary the directed edge (u,v) lies.
    int face_of(int u, int v) const;
    /// Face of the corner between rot(v)[i] and rot(v)[i+1].
    int corner_face(int v, int i) const;
    /// Distinct faces incident to v, ascending ids.
    std::vector<int> faces_at(int v) const;

    bool has_outer() const { return outer_ >= 0; }
    int outer() const;
    const Face& outer_face() const { return faces_[outer()]; }
    bool on_outer(int v) const;
    void set_outer_face(int face_id);
    /// Designates the outer face by its boundary walk (either direction,
    /// any rotation). Throws if no traced face matches.
    void set_outer_walk(const std::vector<int>& walk);
    void clear_outer() { outer_ = -1; }

    const std::vector<std::pair<int, int>>& precolors() const { return precolor_; }
    void set_precolors(std::vector<std::pair<int, int>> pc) { precolor_ = std::move(pc); }

    int pos_in_rot(int v, int u) const;  // index of u in rot(v)

private:
    PlaneGraph() = default;
    void trace_faces();

    std::vector<std::vector<int>> rot_;
    AdjGraph skel_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> edge_face_;  // edge_face_[v][i]: face of (v, rot_[v][i])
    int outer_ = -1;
    int m_ = 0;
    std::vector<std::pair<int, int>> precolor_;
};

struct CycleRef {
    std::vector<int> cycle;
    std::vector<int> interior;  // int(C), ascending
    std::vector<int> exterior;  // ext(C), ascending; contains C0's side
    bool separating() const { return !interior.empty() && !exterior.empty(); }
};

/// Splits V(G) - C into the two sides of the cycle, with "exterior" the
/// side containing the designated outer face. Requires the outer face.
CycleRef classify_cycle(const PlaneGraph& g, const std::vector<int>& cycle);

/// Checks that the vertex sequence is a simple cycle of g.
bool is_cycle_of(const AdjGraph& g, const std::vector<int>& cycle);

// ---- text formats ------------------------------------------------------
//
// Plane-graph format (.pg), line oriented, '#' starts a comment:
//   vertices N
//   <id>: <neighbors in clockwise order>      (one line per vertex)
//   outer: v0 v1 ... vk                       (optional)
//   precolor: v=c v=c ...                     (optional, c in {1,2,3})
//
// Abstract adjacency format (identified-graph export) replaces the header
// with "graph N"; neighbor order carries no meaning there.

PlaneGraph load_plane(std::istream& in);
PlaneGraph load_plane_text(const std::string& text);
PlaneGraph load_plane_file(const std::string& path);

AdjGraph load_abstract_text(const std::string& text);

/// Loads either format; exactly one of the results is set.
struct LoadedGraph {
    std::optional<PlaneGraph> plane;
    std::optional<AdjGraph> abstract_graph;
};
LoadedGraph load_auto_text(const std::string& text);
LoadedGraph load_auto_file(const std::string& path);

std::string to_pg(const PlaneGraph& g);
std::string to_adj_text(const AdjGraph& g);

}  // namespace pgt
