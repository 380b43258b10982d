#pragma once

#include <cstdint>
#include <string>

#include "pgt/graph.hpp"

namespace pgt {

/// Canonical byte key for an abstract graph: equal keys iff isomorphic.
/// Degree-refinement plus backtracking individualization; built for the
/// desk-scale vertex counts this project enumerates (n <= 10 or so).
std::string canonical_key(const AdjGraph& g);

}  // namespace pgt
