#include "conespectra/construct.hpp"

#include "conespectra/degseq.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>

using namespace conespectra;

namespace {

Sequence cat(Sequence head, int value, int copies) {
    head.insert(head.end(), copies, value);
    return head;
}

std::vector<std::size_t> layer_sizes(const LayeredConstruction& lc) {
    std::vector<std::size_t> out;
    for (const auto& layer : lc.layers) out.push_back(layer.size());
    return out;
}

bool realizes(const Graph& g, Sequence pi) {
    Sequence got = g.degree_sequence();
    std::sort(pi.rbegin(), pi.rend());
    return got == pi;
}

} // namespace

TEST_CASE("layered tree, the 17-vertex example") {
    Sequence pi = cat({4, 4, 3, 3, 3, 3, 2}, 1, 10);
    LayeredConstruction lc = bfs_tree(pi);
    CHECK(lc.assigned == pi);
    CHECK(realizes(lc.graph, pi));
    CHECK(layer_sizes(lc) == std::vector<std::size_t>{1, 4, 9, 3});
    std::vector<std::pair<int, int>> expect = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4},           // root
        {1, 5}, {1, 6}, {1, 7},                   // heaviest child keeps 3
        {2, 8}, {2, 9}, {3, 10}, {3, 11}, {4, 12}, {4, 13},
        {5, 14}, {5, 15}, {6, 16}};
    std::sort(expect.begin(), expect.end());
    CHECK(lc.graph.edges() == expect);
}

TEST_CASE("layered unicyclic, the 15-vertex example") {
    Sequence pi = cat({4, 4, 3, 3, 3, 3, 2}, 1, 8);
    LayeredConstruction lc = bfs_unicyclic(pi);
    CHECK(realizes(lc.graph, pi));
    CHECK(lc.graph.has_edge(1, 2));  // the cycle closes at the top
    CHECK(layer_sizes(lc) == std::vector<std::size_t>{1, 4, 7, 3});
    std::vector<std::pair<int, int>> expect = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
        {1, 5}, {1, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 10}, {4, 11},
        {5, 12}, {5, 13}, {6, 14}};
    std::sort(expect.begin(), expect.end());
    CHECK(lc.graph.edges() == expect);
}

TEST_CASE("layered bicyclic, the 13-vertex example") {
    Sequence pi = cat({4, 4, 3, 3, 3, 3, 2}, 1, 6);
    LayeredConstruction lc = bfs_bicyclic(pi);
    CHECK(realizes(lc.graph, pi));
    CHECK(lc.graph.has_edge(1, 2));
    CHECK(lc.graph.has_edge(1, 3));
    CHECK(layer_sizes(lc) == std::vector<std::size_t>{1, 4, 5, 3});
    std::vector<std::pair<int, int>> expect = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
        {1, 5}, {2, 6}, {3, 7}, {4, 8}, {4, 9},
        {5, 10}, {5, 11}, {6, 12}};
    std::sort(expect.begin(), expect.end());
    CHECK(lc.graph.edges() == expect);
}

TEST_CASE("construction rejects impossible inputs") {
    CHECK(thrown_kind([] { bfs_tree({2, 2, 2}); }) == "NotTreeSequence");
    CHECK(thrown_kind([] { bfs_tree({3, 1, 1}); }) == "NotTreeSequence");
    CHECK(thrown_kind([] { bfs_unicyclic({2, 2, 1, 1}); }) == "NotUnicyclicSequence");
    CHECK(thrown_kind([] { bfs_bicyclic({2, 2, 2, 2}); }) == "NotBicyclicSequence");
    CHECK(thrown_kind([] { theta_graph(1, 1, 1); }) == "ParamRange");
    CHECK(thrown_kind([] { cycles_sharing_vertex(2, 3); }) == "ParamRange");
    CHECK(thrown_kind([] { cycles_joined_by_edge(3, 2); }) == "ParamRange");
}

TEST_CASE("fixed core shapes") {
    Graph cc = cycles_sharing_vertex(3, 4);
    CHECK(cc.size() == 6);
    CHECK(cc.degree(0) == 4);
    CHECK(realizes(cc, {4, 2, 2, 2, 2, 2}));
    CHECK(cyclomatic(cc) == 2);

    Graph bb = cycles_joined_by_edge(3, 3);
    CHECK(bb.size() == 6);
    CHECK(realizes(bb, {3, 3, 2, 2, 2, 2}));
    CHECK(cyclomatic(bb) == 2);

    Graph th = theta_graph(2, 1, 2);
    CHECK(th.size() == 4);
    CHECK(realizes(th, {3, 3, 2, 2}));
    CHECK(th.has_edge(0, 1));
    CHECK(cyclomatic(th) == 2);
}

TEST_CASE("case dispatch covers every family shape") {
    // trees and one-cycle shapes
    CHECK(realizes(maximal_cone_graph({3, 1, 1, 1}, 0, 0).full, {3, 1, 1, 1}));
    CHECK(realizes(maximal_cone_graph({2, 2, 2}, 0, 1).full, {2, 2, 2}));
    CHECK(realizes(maximal_cone_graph({3, 2, 2, 2, 1}, 0, 1).full, {3, 2, 2, 2, 1}));

    // two-cycle shapes, one per classification case
    ConeGraph g421 = maximal_cone_graph({4, 2, 2, 2, 2}, 0, 2);
    CHECK(realizes(g421.full, {4, 2, 2, 2, 2}));
    CHECK(g421.h == cycles_sharing_vertex(3, 3));

    ConeGraph g422 = maximal_cone_graph({3, 3, 2, 2}, 0, 2);
    CHECK(g422.h == theta_graph(2, 1, 2));

    ConeGraph g423 = maximal_cone_graph({5, 2, 2, 2, 2, 1}, 0, 2);
    CHECK(realizes(g423.full, {5, 2, 2, 2, 2, 1}));
    CHECK(g423.h.has_edge(0, 5));  // the pendant path hangs from the shared vertex

    ConeGraph g424 = maximal_cone_graph({4, 3, 2, 2, 2, 1}, 0, 2);
    CHECK(realizes(g424.full, {4, 3, 2, 2, 2, 1}));

    // apexes on top: full degrees match, non-apex part realizes the reduction
    ConeGraph lifted = maximal_cone_graph({4, 4, 2, 2, 2}, 1, 0);
    CHECK(realizes(lifted.full, {4, 4, 2, 2, 2}));
    CHECK(realizes(lifted.h, {3, 1, 1, 1}));

    CHECK(thrown_kind([] { maximal_cone_graph({3, 3, 3, 3, 2, 2}, 0, 3); }) ==
          "UnsupportedCyclomatic");
}

TEST_CASE("pendant paths at the shared vertex split evenly, longest first") {
    // two pendant paths over three spare vertices: lengths 2 and 1
    ConeGraph g = maximal_cone_graph({6, 2, 2, 2, 2, 2, 1, 1}, 0, 2);
    CHECK(g.h.has_edge(0, 5));
    CHECK(g.h.has_edge(5, 7));
    CHECK(g.h.has_edge(0, 6));
    CHECK(g.h.degree(6) == 1);
    CHECK(g.h.degree(7) == 1);

    // two pendant paths over four spare vertices: lengths 2 and 2
    ConeGraph e = maximal_cone_graph({6, 2, 2, 2, 2, 2, 2, 1, 1}, 0, 2);
    CHECK(e.h.has_edge(0, 5));
    CHECK(e.h.has_edge(5, 7));
    CHECK(e.h.has_edge(0, 6));
    CHECK(e.h.has_edge(6, 8));
}

TEST_CASE("vertex ids realize their sequence positions") {
    Sequence pi = cat({4, 4, 3, 3, 3, 3, 2}, 1, 6);
    for (int variant = 0; variant < 3; ++variant) {
        LayeredConstruction lc = variant == 0   ? bfs_tree(cat({4, 4, 3, 3, 3, 3, 2}, 1, 10))
                                 : variant == 1 ? bfs_unicyclic(cat({4, 4, 3, 3, 3, 3, 2}, 1, 8))
                                                : bfs_bicyclic(pi);
        for (int v = 0; v < lc.graph.size(); ++v) CHECK(lc.graph.degree(v) == lc.assigned[v]);
    }
}
