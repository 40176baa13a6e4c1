#pragma once

#include "conespectra/degseq.hpp"
#include "conespectra/graph.hpp"

#include <vector>

namespace conespectra {

// Result of a layer-by-layer build. Vertex i realizes exactly assigned[i]
// (the i-th reduced degree); layers groups vertices by BFS distance from
// vertex 0.
struct LayeredConstruction {
    Graph graph;
    std::vector<std::vector<int>> layers;
    Sequence assigned;
};

// Breadth-first tree realization: vertex 0 gets the first degree and
// assigned[0] children, every later vertex is attached to the earliest open
// slot and gets assigned[i] - 1 children. Requires a tree degree sequence
// (non-increasing, positive, sum 2(l-1)); throws NotTreeSequence.
LayeredConstruction bfs_tree(const Sequence& pi_star);

// Same filling with one cycle: all-2 sequences give the plain cycle; with a
// vertex of degree >= 3 the root's first two children close a triangle and
// give up one child slot each. Throws NotUnicyclicSequence.
LayeredConstruction bfs_unicyclic(const Sequence& pi_star);

// Two independent cycles, by shape of the sequence:
//   (4, 2...2)            a triangle and an (l-2)-cycle sharing vertex 0
//   (3, 3, 2...2)         theta graph, hubs 0 and 1
//   (d, 2, 2, 2, 2, ...)  two triangles sharing vertex 0 plus d-4 pendant
//                         paths at 0, lengths as equal as possible
//   otherwise             BFS filling where vertex 1 is also joined to
//                         vertices 2 and 3, closing two short cycles
// Throws NotBicyclicSequence when the sequence fits none of these.
LayeredConstruction bfs_bicyclic(const Sequence& pi_star);

// Named two-cycle frames. ParamRange unless n1, n2 >= 3 (cycles) resp.
// q >= r >= 1 and p >= q >= 2 (theta).
Graph cycles_joined_by_edge(int n1, int n2);          // cycle-edge-cycle, B shape
Graph cycles_sharing_vertex(int n1, int n2);          // both cycles through vertex 0
Graph theta_graph(int p, int r, int q);               // hubs 0,1 joined by 3 paths

// The spectrally maximal graph of the family: the matching layered
// realization of the reduced sequence, joined with the t apexes.
ConeGraph maximal_cone_graph(const ConeSequence& s);
// Convenience overload; classifies first. c >= 3 throws UnsupportedCyclomatic.
ConeGraph maximal_cone_graph(const Sequence& pi, int t, int c);

// The layered realization underlying maximal_cone_graph, before the join.
LayeredConstruction maximal_reduced_graph(const ConeSequence& s);

} // namespace conespectra
