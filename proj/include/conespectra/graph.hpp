#pragma once

#include <utility>
#include <vector>

namespace conespectra {

// Simple undirected graph on vertices 0..n-1, kept as sorted adjacency
// lists. Small and copy-friendly on purpose: the search code clones graphs
// freely.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // throws RangeError on loops/duplicates
    void remove_edge(int u, int v);  // throws RangeError if absent
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    // Edges as (min, max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    // Degrees sorted non-increasing.
    std::vector<int> degree_sequence() const;
    bool connected() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
    int edges_ = 0;
};

// An apex set of t vertices joined to every other vertex. Vertices 0..t-1
// are the apexes; vertex i of h becomes t + i.
struct ConeGraph {
    int t = 0;
    Graph h;     // the non-apex part, own labels 0..(n-t)-1
    Graph full;  // h plus the t apexes, each adjacent to everything else
};

ConeGraph join_cone(int t, const Graph& h);

// edges - vertices + 1 for a connected graph; throws Disconnected otherwise.
int cyclomatic(const Graph& g);

// Vertices surviving repeated deletion of degree-1 vertices (the 2-core),
// in increasing label order. Throws IsTree when nothing survives.
std::vector<int> core_vertices(const Graph& g);

// Subgraph induced on the given (sorted, distinct) labels, relabeled to
// 0..k-1 in that order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// induced_subgraph over core_vertices: the maximal subgraph with minimum
// degree >= 2. Same cyclomatic number as g.
Graph basic_graph(const Graph& g);

// BFS distances from root; throws Disconnected if some vertex is unreachable.
std::vector<int> bfs_levels(const Graph& g, int root);

// A maximal path whose interior vertices all have degree 2 and whose
// endpoints have degree >= 3. Open: vertices = u_1..u_{k+1}, all distinct.
// Closed: the endpoints coincide and the shared vertex is listed once, so
// vertices = u_1..u_k. length() is the edge count k in both cases.
struct InternalPath {
    std::vector<int> vertices;
    bool closed = false;
    int length() const {
        return closed ? static_cast<int>(vertices.size())
                      : static_cast<int>(vertices.size()) - 1;
    }
};

// All internal paths of g, deduplicated (each is reported once regardless of
// traversal direction), in a deterministic order.
std::vector<InternalPath> internal_paths(const Graph& g);

// Moves the edges v-w (w in moved) to u-w. Requires every w in moved to be a
// neighbor of v but not of u, and w != u; throws InvalidShiftSet otherwise
// (also when moved is empty).
Graph shift_edges(const Graph& g, int u, int v, const std::vector<int>& moved);

// Replaces uv, xy by uy, xv. Requires uv, xy in E, uy, xv not in E, and the
// four vertices distinct; throws PreconditionViolated otherwise. Preserves
// the degree sequence.
Graph switch_edges(const Graph& g, int u, int v, int x, int y);

} // namespace conespectra
