#include "conespectra/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace conespectra {

std::vector<int> refined_colors(const Graph& g) {
    const int n = g.size();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    {   // normalize to dense ranks
        std::vector<int> sorted = color;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), color[v]) -
                                        sorted.begin());
    }
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);

    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            around.reserve(g.degree(v));
            for (int w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            sig[v] = {color[v], std::move(around)};
        }
        std::map<std::pair<int, std::vector<int>>, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
        int next = 0;
        for (auto& kv : rank) kv.second = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = rank.at(sig[v]);
        if (next == classes) return fresh;
        classes = next;
        color = std::move(fresh);
    }
}

namespace {

// Backtracking search for the vertex order that maximizes the adjacency bit
// string, restricted to orders listing color classes in rank order. best[]
// always holds the largest prefix seen so far; rows below it prune, rows
// above it overwrite it and invalidate everything deeper, so the walk is
// independent of the input labeling.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> slot_color;           // required color at each position
    std::vector<std::vector<int>> by_color;
    std::vector<int> placed;
    std::vector<char> used;
    std::vector<std::vector<char>> best;   // best[i]: adjacency row to positions 0..i-1
    bool complete = false;                 // best reaches position n-1

    explicit CanonSearch(const Graph& graph, const std::vector<int>& colors)
        : g(graph), n(graph.size()), used(graph.size(), 0), best(graph.size()) {
        int classes = 0;
        for (int v = 0; v < n; ++v) classes = std::max(classes, colors[v] + 1);
        by_color.resize(classes);
        for (int v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (std::size_t i = 0; i < by_color[c].size(); ++i) slot_color.push_back(c);
        placed.reserve(n);
    }

    void dfs(int pos) {
        if (pos == n) {
            complete = true;
            return;
        }
        for (int v : by_color[slot_color[pos]]) {
            if (used[v]) continue;
            std::vector<char> row(pos);
            for (int i = 0; i < pos; ++i) row[i] = g.has_edge(v, placed[i]) ? 1 : 0;
            if (complete || pos == 0 || !best[pos].empty()) {
                if (row < best[pos]) continue;
                if (row > best[pos]) {
                    best[pos] = row;
                    for (int k = pos + 1; k < n; ++k) best[k].clear();
                    complete = false;
                }
            } else {
                // deeper best rows were invalidated; adopt this one
                best[pos] = row;
                for (int k = pos + 1; k < n; ++k) best[k].clear();
            }
            used[v] = 1;
            placed.push_back(v);
            dfs(pos + 1);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

} // namespace

std::vector<std::pair<int, int>> canonical_form(const Graph& g) {
    if (g.size() == 0) return {};
    CanonSearch search(g, refined_colors(g));
    search.dfs(0);
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (int v = 1; v < g.size(); ++v)
        for (int i = 0; i < v; ++i)
            if (search.best[v][i]) out.emplace_back(i, v);
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace conespectra
