#include "conespectra/construct.hpp"
#include "conespectra/errors.hpp"

#include <algorithm>
#include <numeric>

namespace conespectra {

namespace {

bool non_increasing_positive(const Sequence& s) {
    return !s.empty() && s.back() >= 1 && std::is_sorted(s.rbegin(), s.rend());
}

std::vector<std::vector<int>> layers_from(const Graph& g) {
    std::vector<int> dist = bfs_levels(g, 0);
    int depth = *std::max_element(dist.begin(), dist.end());
    std::vector<std::vector<int>> layers(depth + 1);
    for (int v = 0; v < g.size(); ++v) layers[dist[v]].push_back(v);
    return layers;
}

// Attach vertex v's children to the earliest unattached ids. child_count
// maps position -> number of fresh edges hanging below it.
Graph fill_children(const Sequence& pi_star, const std::vector<int>& child_count,
                    const char* err_kind) {
    const int l = static_cast<int>(pi_star.size());
    Graph g(l);
    int next = 1;
    for (int v = 0; v < l; ++v) {
        if (v > 0 && v >= next)
            fail(err_kind, "sequence leaves vertex " + std::to_string(v) + " unattached");
        for (int k = 0; k < child_count[v]; ++k) {
            if (next >= l) fail(err_kind, "sequence runs out of vertices");
            g.add_edge(v, next++);
        }
    }
    if (next != l) fail(err_kind, "sequence does not use every vertex");
    return g;
}

LayeredConstruction wrap(Graph g, const Sequence& pi_star) {
    LayeredConstruction out;
    out.layers = layers_from(g);
    out.graph = std::move(g);
    out.assigned = pi_star;
    return out;
}

} // namespace

LayeredConstruction bfs_tree(const Sequence& pi_star) {
    const int l = static_cast<int>(pi_star.size());
    if (l < 2 || !non_increasing_positive(pi_star))
        fail("NotTreeSequence", "need at least two non-increasing positive degrees");
    if (std::accumulate(pi_star.begin(), pi_star.end(), 0L) != 2L * (l - 1))
        fail("NotTreeSequence", "degree sum must be 2(l-1)");

    std::vector<int> child_count(l);
    for (int v = 0; v < l; ++v) child_count[v] = v == 0 ? pi_star[0] : pi_star[v] - 1;
    return wrap(fill_children(pi_star, child_count, "NotTreeSequence"), pi_star);
}

LayeredConstruction bfs_unicyclic(const Sequence& pi_star) {
    const int l = static_cast<int>(pi_star.size());
    if (!non_increasing_positive(pi_star))
        fail("NotUnicyclicSequence", "need non-increasing positive degrees");
    if (std::accumulate(pi_star.begin(), pi_star.end(), 0L) != 2L * l)
        fail("NotUnicyclicSequence", "degree sum must be 2l");
    SeqCase kind;
    try {
        kind = classify_reduced(pi_star, 1);
    } catch (const Error& e) {
        fail("NotUnicyclicSequence", e.what());
    }

    if (kind == SeqCase::C411) {
        Graph g(l);
        for (int v = 0; v < l; ++v) g.add_edge(v, (v + 1) % l);
        return wrap(std::move(g), pi_star);
    }
    // one triangle at the root: children 1 and 2 are adjacent and each gives
    // up one child slot for it
    std::vector<int> child_count(l);
    for (int v = 0; v < l; ++v) {
        if (v == 0)
            child_count[v] = pi_star[0];
        else if (v <= 2)
            child_count[v] = pi_star[v] - 2;
        else
            child_count[v] = pi_star[v] - 1;
    }
    Graph g = fill_children(pi_star, child_count, "NotUnicyclicSequence");
    g.add_edge(1, 2);
    return wrap(std::move(g), pi_star);
}

LayeredConstruction bfs_bicyclic(const Sequence& pi_star) {
    const int l = static_cast<int>(pi_star.size());
    if (!non_increasing_positive(pi_star))
        fail("NotBicyclicSequence", "need non-increasing positive degrees");
    if (std::accumulate(pi_star.begin(), pi_star.end(), 0L) != 2L * (l + 1))
        fail("NotBicyclicSequence", "degree sum must be 2(l+1)");
    SeqCase kind;
    try {
        kind = classify_reduced(pi_star, 2);
    } catch (const Error& e) {
        fail("NotBicyclicSequence", e.what());
    }

    switch (kind) {
        case SeqCase::C421:
            return wrap(cycles_sharing_vertex(3, l - 2), pi_star);
        case SeqCase::C422:
            return wrap(theta_graph(l - 2, 1, 2), pi_star);
        case SeqCase::C423: {
            // two triangles at vertex 0, then pi_star[0]-4 pendant paths at 0
            // whose lengths differ by at most one, the longer ones first. The
            // paths fill level by level so ids stay sorted by distance from 0
            // and the interior 2s still precede the leaf 1s.
            Graph g(l);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            g.add_edge(0, 3);
            g.add_edge(0, 4);
            g.add_edge(3, 4);
            const int paths = pi_star[0] - 4;
            const int spare = l - 5;
            const int base = spare / paths, extra = spare % paths;
            std::vector<int> tip(paths, 0);  // deepest vertex of each path so far
            int next = 5;
            for (int level = 1; level <= base + (extra ? 1 : 0); ++level)
                for (int p = 0; p < paths; ++p) {
                    if (level > base + (p < extra ? 1 : 0)) continue;
                    g.add_edge(tip[p], next);
                    tip[p] = next++;
                }
            return wrap(std::move(g), pi_star);
        }
        case SeqCase::C424: {
            // vertex 1 is joined to 2 and 3 as well, closing the two
            // four-edge cycles 0-1-2-0 and 0-1-3-0
            std::vector<int> child_count(l);
            for (int v = 0; v < l; ++v) {
                if (v == 0)
                    child_count[v] = pi_star[0];
                else if (v == 1)
                    child_count[v] = pi_star[1] - 3;
                else if (v <= 3)
                    child_count[v] = pi_star[v] - 2;
                else
                    child_count[v] = pi_star[v] - 1;
            }
            Graph g = fill_children(pi_star, child_count, "NotBicyclicSequence");
            g.add_edge(1, 2);
            g.add_edge(1, 3);
            return wrap(std::move(g), pi_star);
        }
        default:
            fail("NotBicyclicSequence", "sequence has no two-cycle shape");
    }
}

Graph cycles_joined_by_edge(int n1, int n2) {
    if (n1 < 3 || n2 < 3) fail("ParamRange", "cycle lengths must be at least 3");
    Graph g(n1 + n2);
    for (int v = 0; v < n1; ++v) g.add_edge(v, (v + 1) % n1);
    for (int v = 0; v < n2; ++v) g.add_edge(n1 + v, n1 + (v + 1) % n2);
    g.add_edge(0, n1);
    return g;
}

Graph cycles_sharing_vertex(int n1, int n2) {
    if (n1 < 3 || n2 < 3) fail("ParamRange", "cycle lengths must be at least 3");
    Graph g(n1 + n2 - 1);
    for (int v = 0; v < n1; ++v) g.add_edge(v, (v + 1) % n1);
    // second cycle: 0, n1, n1+1, ..., n1+n2-2, back to 0
    g.add_edge(0, n1);
    for (int v = 0; v + 1 < n2 - 1; ++v) g.add_edge(n1 + v, n1 + v + 1);
    g.add_edge(n1 + n2 - 2, 0);
    return g;
}

Graph theta_graph(int p, int r, int q) {
    if (!(q >= r && r >= 1 && p >= q && q >= 2))
        fail("ParamRange", "need q >= r >= 1 and p >= q >= 2");
    Graph g(p + q + r - 1);
    int next = 2;
    auto path = [&](int len) {
        // hub 0 to hub 1 through len-1 fresh interior vertices
        int prev = 0;
        for (int step = 1; step < len; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    };
    path(p);
    path(r);
    path(q);
    return g;
}

LayeredConstruction maximal_reduced_graph(const ConeSequence& s) {
    Sequence red = reduce(s);
    switch (s.c) {
        case 0: return bfs_tree(red);
        case 1: return bfs_unicyclic(red);
        default: return bfs_bicyclic(red);
    }
}

ConeGraph maximal_cone_graph(const ConeSequence& s) {
    return join_cone(s.t, maximal_reduced_graph(s).graph);
}

ConeGraph maximal_cone_graph(const Sequence& pi, int t, int c) {
    if (c >= 3) fail("UnsupportedCyclomatic", "no construction rule beyond two cycles");
    return maximal_cone_graph(classify(pi, t, c));
}

} // namespace conespectra
