#pragma once

#include <array>
#include <optional>
#include <vector>

namespace pgt {

/// Simple undirected graph as sorted adjacency lists. Vertices are dense
/// 0-based ids and every operation iterates in id order, so results are
/// deterministic for a given input.
class AdjGraph {
public:
    AdjGraph() = default;
    explicit AdjGraph(int n) : adj_(n) {}

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    /// sigma(G) = |V| + |E|, the minimality measure ordering reductions.
    int sigma() const { return n() + m(); }

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
};

using Triangle = std::array<int, 3>;

bool connected(const AdjGraph& g);

/// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_dist(const AdjGraph& g, int src);

/// All 3-cliques, each reported once as an ascending triple.
std::vector<Triangle> triangles(const AdjGraph& g);

/// Minimum vertex-to-vertex distance over all pairs of distinct triangles;
/// nullopt when the graph has fewer than two triangles. Triangles sharing
/// a vertex are at distance 0.
std::optional<int> triangle_distance(const AdjGraph& g);

/// Every simple cycle of length <= max_len, each reported exactly once up
/// to rotation and reflection: the stored form starts at the cycle's
/// smallest vertex and runs toward its smaller neighbor on the cycle.
std::vector<std::vector<int>> cycles_up_to(const AdjGraph& g, int max_len);

/// First simple cycle of exactly the given length, in the deterministic
/// search order of cycles_up_to; nullopt if none exists.
std::optional<std::vector<int>> find_cycle_of_length(const AdjGraph& g, int len);

/// True if the vertex lies on some 3-cycle (facial or not).
bool on_triangle(const AdjGraph& g, int v);

struct IdentifyResult {
    AdjGraph graph;
    std::vector<int> vmap;  // old vertex id -> new vertex id
};

/// G[S_1,...,S_l]: collapse each part to a single vertex, merge parallel
/// edges. Throws ArgError if a part contains an adjacent pair (loop) or the
/// parts are not disjoint. New ids are assigned by ascending smallest
/// original id per group, so the result is deterministic.
IdentifyResult identify(const AdjGraph& g, const std::vector<std::vector<int>>& parts);

}  // namespace pgt
