#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pgt/graph.hpp"

namespace pgt {

/// Per-color defect caps. Color i may induce a subgraph of maximum degree
/// caps[i-1]; the default (1,1,0) is the configuration this project is
/// built around.
struct ColoringSpec {
    std::array<int, 3> caps{1, 1, 0};
    int cap(int color) const { return caps[color - 1]; }
};

/// Partial or total assignment vertex -> {1,2,3}; 0 means uncolored.
using Coloring = std::vector<int>;

struct CapViolation {
    int vertex;
    int defect;
    int cap;
};

/// Defect of v: colored neighbors sharing v's color. 0 for uncolored v.
int defect(const AdjGraph& g, const Coloring& col, int v);

/// Every colored vertex whose defect exceeds its cap. Uncolored vertices
/// and uncolored neighbors do not count.
std::vector<CapViolation> verify(const AdjGraph& g, const Coloring& col,
                                 const ColoringSpec& spec);

bool is_properly_colored(const AdjGraph& g, const Coloring& col, int v);
bool is_nicely_colored(const AdjGraph& g, const Coloring& col, int v,
                       const ColoringSpec& spec);

struct SolveStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
};

struct SolveResult {
    bool sat = false;
    Coloring coloring;
    SolveStats stats;
};

/// Deterministic backtracking solver: vertices in ascending id order,
/// colors tried 1,2,3, forward pruning on defect budgets. Finds a total
/// valid coloring extending `pinned` in which every vertex of `frontier`
/// takes a color different from each of its pinned neighbors. Throws
/// ArgError when the pinned assignment is invalid on its own induced
/// subgraph.
SolveResult solve(const AdjGraph& g, const ColoringSpec& spec, const Coloring& pinned,
                  const std::vector<char>& frontier);

SolveResult solve(const AdjGraph& g, const ColoringSpec& spec);

/// All valid colorings of a standalone k-cycle, lexicographic in
/// (vertex0, vertex1, ...) order. The callers care about k = 3 and 7.
std::vector<Coloring> boundary_colorings(int len, const ColoringSpec& spec);

struct BoundaryOutcome {
    Coloring boundary;
    bool extended = false;
};

struct SuperextendReport {
    bool superextendable = false;
    int total = 0;
    int passed = 0;
    std::vector<BoundaryOutcome> outcomes;
    SolveStats stats;
};

/// For every valid coloring of the cycle (as a standalone cycle), tries to
/// extend it to g so that every vertex outside the cycle with a neighbor
/// on it gets a color different from all its cycle neighbors.
SuperextendReport check_superextendable(const AdjGraph& g, const std::vector<int>& cycle,
                                        const ColoringSpec& spec,
                                        bool keep_outcomes = false);

}  // namespace pgt
