#include "conespectra/graph.hpp"
#include "conespectra/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace conespectra {

Graph::Graph(int n) : adj_(n < 0 ? 0 : n) {
    if (n < 0) fail("RangeError", "negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= size())
        fail("RangeError", "vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) fail("RangeError", "loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) fail("RangeError", "duplicate edge");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) fail("RangeError", "edge not present");
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edges_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(size());
    for (const auto& a : adj_) d.push_back(static_cast<int>(a.size()));
    std::sort(d.rbegin(), d.rend());
    return d;
}

bool Graph::connected() const {
    if (size() == 0) return true;
    std::vector<char> seen(size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == size();
}

ConeGraph join_cone(int t, const Graph& h) {
    if (t < 0) fail("RangeError", "negative apex count");
    ConeGraph out;
    out.t = t;
    out.h = h;
    const int n = t + h.size();
    out.full = Graph(n);
    for (int a = 0; a < t; ++a)
        for (int v = a + 1; v < n; ++v) out.full.add_edge(a, v);
    for (auto [u, v] : h.edges()) out.full.add_edge(t + u, t + v);
    return out;
}

int cyclomatic(const Graph& g) {
    if (!g.connected()) fail("Disconnected", "cyclomatic number needs a connected graph");
    return g.edge_count() - g.size() + 1;
}

std::vector<int> core_vertices(const Graph& g) {
    std::vector<int> deg(g.size());
    std::vector<char> dead(g.size(), 0);
    std::queue<int> q;
    for (int v = 0; v < g.size(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) {
            dead[v] = 1;
            q.push(v);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dead[w]) continue;
            if (--deg[w] <= 1) {
                dead[w] = 1;
                q.push(w);
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (!dead[v]) out.push_back(v);
    if (out.empty()) fail("IsTree", "every vertex is stripped: the graph has no cycle");
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.size() || index[v] != -1)
            fail("RangeError", "vertex selection must be distinct and in range");
        index[v] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(vertices.size()));
    for (auto [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1) out.add_edge(index[u], index[v]);
    return out;
}

Graph basic_graph(const Graph& g) { return induced_subgraph(g, core_vertices(g)); }

std::vector<int> bfs_levels(const Graph& g, int root) {
    if (root < 0 || root >= g.size()) fail("RangeError", "root out of range");
    std::vector<int> dist(g.size(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    for (int v = 0; v < g.size(); ++v)
        if (dist[v] == -1) fail("Disconnected", "vertex " + std::to_string(v) + " unreachable");
    return dist;
}

std::vector<InternalPath> internal_paths(const Graph& g) {
    std::vector<InternalPath> out;
    std::set<std::vector<int>> seen;  // canonical vertex lists

    auto record = [&](std::vector<int> verts, bool closed) {
        std::vector<int> key = verts;
        if (closed) {
            // canonical closed form: fixed start (the unique branch vertex),
            // lower-id second vertex decides the direction
            if (key.size() > 2 && key[1] > key[key.size() - 1])
                std::reverse(key.begin() + 1, key.end());
        } else {
            if (key.front() > key.back() ||
                (key.front() == key.back() && key.size() > 1 && key[1] > key[key.size() - 2]))
                std::reverse(key.begin(), key.end());
        }
        if (seen.insert(key).second) out.push_back({std::move(key), closed});
    };

    for (int u = 0; u < g.size(); ++u) {
        if (g.degree(u) < 3) continue;
        for (int first : g.neighbors(u)) {
            std::vector<int> path{u, first};
            int prev = u, cur = first;
            while (g.degree(cur) == 2 && cur != u) {
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                path.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (g.degree(cur) < 3 && cur != u) continue;  // dead-ends at a pendant: not internal
            if (cur == u) {
                path.pop_back();  // endpoint repeats the start; list it once
                record(std::move(path), true);
            } else {
                record(std::move(path), false);
            }
        }
    }
    return out;
}

Graph shift_edges(const Graph& g, int u, int v, const std::vector<int>& moved) {
    if (u < 0 || u >= g.size() || v < 0 || v >= g.size() || u == v)
        fail("RangeError", "shift needs two distinct vertices in range");
    if (moved.empty()) fail("InvalidShiftSet", "no edges selected");
    std::set<int> dedup(moved.begin(), moved.end());
    if (dedup.size() != moved.size()) fail("InvalidShiftSet", "repeated vertex in shift set");
    for (int w : dedup) {
        if (w == u || w == v || !g.has_edge(v, w) || g.has_edge(u, w))
            fail("InvalidShiftSet", "vertex " + std::to_string(w) +
                                        " must neighbor v but not u (and differ from both)");
    }
    Graph out = g;
    for (int w : dedup) {
        out.remove_edge(v, w);
        out.add_edge(u, w);
    }
    return out;
}

Graph switch_edges(const Graph& g, int u, int v, int x, int y) {
    std::set<int> distinct{u, v, x, y};
    if (distinct.size() != 4) fail("PreconditionViolated", "vertices must be distinct");
    for (int w : distinct)
        if (w < 0 || w >= g.size()) fail("RangeError", "vertex out of range");
    if (!g.has_edge(u, v) || !g.has_edge(x, y))
        fail("PreconditionViolated", "uv and xy must be edges");
    if (g.has_edge(u, y) || g.has_edge(x, v))
        fail("PreconditionViolated", "uy and xv must be non-edges");
    Graph out = g;
    out.remove_edge(u, v);
    out.remove_edge(x, y);
    out.add_edge(u, y);
    out.add_edge(x, v);
    return out;
}

} // namespace conespectra
