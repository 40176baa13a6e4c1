#pragma once

#include "conespectra/graph.hpp"

#include <utility>
#include <vector>

namespace conespectra {

// Equitable-partition colors: start from degrees, repeatedly split classes
// by the multiset of neighbor colors until stable. Colors are dense ranks
// that agree across isomorphic graphs.
std::vector<int> refined_colors(const Graph& g);

// Canonical edge list: relabels vertices (color classes in rank order,
// backtracking within classes to maximize the adjacency bit string) so that
// two graphs are isomorphic exactly when their canonical forms are equal.
std::vector<std::pair<int, int>> canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace conespectra
