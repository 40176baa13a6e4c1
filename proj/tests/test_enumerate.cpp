#include "conespectra/enumerate.hpp"

#include "conespectra/isomorphism.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>

using namespace conespectra;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

} // namespace

TEST_CASE("realization counts for small families") {
    CHECK(realize_all({1, 1}).size() == 1);
    CHECK(realize_all({2, 2, 2}).size() == 1);
    CHECK(realize_all({2, 2, 1, 1}).size() == 1);
    CHECK(realize_all({3, 2, 2, 2, 1}).size() == 2);
    CHECK(realize_all({3, 2, 2, 1, 1, 1}).size() == 2);

    auto p4 = realize_all({2, 2, 1, 1});
    CHECK(isomorphic(p4.front(), path(4)));
}

TEST_CASE("realizations are connected, on-sequence, pairwise distinct") {
    Sequence pi = {3, 2, 2, 2, 1};
    auto family = realize_all(pi);
    for (const auto& g : family) {
        CHECK(g.connected());
        CHECK(g.degree_sequence() == pi);
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            CHECK_FALSE(isomorphic(family[i], family[j]));
}

TEST_CASE("unrealizable sequences give an empty family") {
    CHECK(realize_all({5, 1, 1, 1}).empty());  // top degree exceeds l - 1
    CHECK(realize_all({3, 2, 2}).empty());     // odd sum
}

TEST_CASE("enumeration guards") {
    CHECK(thrown_kind([] { realize_all(Sequence(12, 1), 9); }) == "TooLarge");
    CHECK(thrown_kind([] { realize_all({1, 2}); }) == "RangeError");
    CHECK(thrown_kind([] { realize_all({2, 0, 2}); }) == "RangeError");
}

TEST_CASE("isomorphism test and canonical forms") {
    Graph a = path(4);
    Graph b(4);  // P4 with shuffled labels
    b.add_edge(2, 0);
    b.add_edge(0, 3);
    b.add_edge(3, 1);
    CHECK(isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(b));

    Graph star(4);
    for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
    CHECK_FALSE(isomorphic(a, star));

    Graph two_triangles(6);  // 2-regular like C6, different shape
    two_triangles.add_edge(0, 1);
    two_triangles.add_edge(1, 2);
    two_triangles.add_edge(2, 0);
    two_triangles.add_edge(3, 4);
    two_triangles.add_edge(4, 5);
    two_triangles.add_edge(5, 3);
    CHECK_FALSE(isomorphic(cycle(6), two_triangles));
    CHECK(canonical_form(cycle(6)) != canonical_form(two_triangles));
}

TEST_CASE("brute-force argmax agrees with the construction") {
    OracleResult one_cycle = oracle_maximal(classify({3, 2, 2, 2, 1}, 0, 1), 0.0);
    CHECK(one_cycle.family_size == 2);
    CHECK(one_cycle.unique);
    CHECK(one_cycle.gap_to_second == doctest::Approx(0.07854053830767738).epsilon(1e-10));
    CHECK(isomorphic(one_cycle.best.full, maximal_cone_graph({3, 2, 2, 2, 1}, 0, 1).full));

    OracleResult two_cycle = oracle_maximal(classify({4, 3, 2, 2, 2, 1}, 0, 2), 0.0);
    CHECK(two_cycle.family_size == 4);
    CHECK(two_cycle.unique);
    CHECK(two_cycle.gap_to_second == doctest::Approx(0.07693544556508991).epsilon(1e-10));
    CHECK(two_cycle.perron.theta == doctest::Approx(2.705586727307844).epsilon(1e-10));
    CHECK(isomorphic(two_cycle.best.full, maximal_cone_graph({4, 3, 2, 2, 2, 1}, 0, 2).full));

    // one-member family: the gap carries no information but unique holds
    OracleResult lone = oracle_maximal(classify({2, 2, 2}, 0, 1), 1.0);
    CHECK(lone.family_size == 1);
    CHECK(lone.unique);
    CHECK(lone.perron.theta == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("reduced-sequence oracle lifts behind apexes") {
    // star behind one apex: full graph is K2 joined to 3 leaves
    OracleResult r = oracle_maximal_reduced({3, 1, 1, 1}, 1, 0.0);
    CHECK(r.family_size == 1);
    CHECK(r.best.full.size() == 5);
    CHECK(r.best.t == 1);
    CHECK(r.best.full.degree(0) == 4);

    CHECK(thrown_kind([] { oracle_maximal_reduced({5, 1, 1, 1}, 0, 0.0); }) == "EmptyFamily");
}

TEST_CASE("adjacent-pair scan finds nothing at small sizes") {
    CHECK(counterexample_search(7, 0, 0, 0.5).empty());
    CHECK(counterexample_search(6, 0, 2, 0.0).empty());
    CHECK(counterexample_search(6, 1, 1, 1.0).empty());
}
