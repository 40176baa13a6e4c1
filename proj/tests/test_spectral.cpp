#include "conespectra/spectral.hpp"

#include "conespectra/construct.hpp"
#include "conespectra/enumerate.hpp"
#include "doctest.h"
#include "oracle_eigen.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace conespectra;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("closed forms at alpha zero") {
    CHECK(theta(path(3), 0.0).theta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(theta(path(4), 0.0).theta ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(theta(star(3), 0.0).theta == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    // paths: 2 cos(pi / (n+1))
    for (int n : {2, 5, 6, 9})
        CHECK(theta(path(n), 0.0).theta ==
              doctest::Approx(2.0 * std::cos(M_PI / (n + 1))).epsilon(1e-11));
    CHECK(theta(complete(4), 0.0).theta == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("regular graphs hit d(1+alpha) for every alpha") {
    for (double a : {0.0, 0.3, 1.0, 2.5}) {
        CHECK(theta(cycle(5), a).theta == doctest::Approx(2.0 * (1.0 + a)).epsilon(1e-12));
        CHECK(theta(complete(4), a).theta == doctest::Approx(3.0 * (1.0 + a)).epsilon(1e-12));
    }
}

TEST_CASE("power iteration agrees with the dense eigensolver") {
    std::vector<Graph> probes;
    for (const Graph& g : realize_all({3, 2, 2, 2, 1})) probes.push_back(g);
    probes.push_back(theta_graph(2, 1, 2));
    probes.push_back(join_cone(2, path(3)).full);
    probes.push_back(star(5));
    for (const Graph& g : probes)
        for (double a : {0.0, 0.5, 1.0}) {
            double mine = theta(g, a).theta;
            double ref = test_oracle::largest_eigenvalue(g, a);
            CHECK(mine == doctest::Approx(ref).epsilon(1e-10));
        }
}

TEST_CASE("dominant weights are positive, unit and consistent") {
    PerronResult pr = theta(join_cone(1, cycle(4)).full, 0.7);
    double norm = 0.0;
    for (double w : pr.weights) {
        CHECK(w > 0.0);
        norm += w * w;
    }
    CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pr.residual <= 1e-12);
    CHECK(rayleigh(join_cone(1, cycle(4)).full, 0.7, pr.weights) ==
          doctest::Approx(pr.theta).epsilon(1e-12));
}

TEST_CASE("assembled matrix") {
    Graph g = path(3);
    auto m = assemble(g, 0.25);
    CHECK(m[0][0] == doctest::Approx(0.25));
    CHECK(m[1][1] == doctest::Approx(0.5));
    CHECK(m[0][1] == 1.0);
    CHECK(m[0][2] == 0.0);
    CHECK(m[1][0] == m[0][1]);
    CHECK(thrown_kind([&] { assemble(g, -0.1); }) == "RangeError");
}

TEST_CASE("spectral errors") {
    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(thrown_kind([&] { theta(split, 0.0); }) == "Disconnected");
    CHECK(thrown_kind([] { theta(path(3), -1.0); }) == "RangeError");
    CHECK(thrown_kind([] { rayleigh(path(3), 0.0, {1.0, 1.0, 1.0}); }) == "NotUnit");
    CHECK(thrown_kind([] { rayleigh(path(3), 0.0, {1.0, 0.0}); }) == "LengthMismatch");
    CHECK(theta(Graph(1), 5.0).theta == 0.0);
}

TEST_CASE("three-way comparison with a margin") {
    CHECK(compare_theta(path(4), star(3), 0.0) == ThetaOrder::Less);
    CHECK(compare_theta(star(3), path(4), 0.0) == ThetaOrder::Greater);
    CHECK(compare_theta(path(4), path(4), 0.0) == ThetaOrder::Indistinguishable);
    // C5 and C5: equal by symmetry even at alpha > 0
    CHECK(compare_theta(cycle(5), cycle(5), 1.0) == ThetaOrder::Indistinguishable);
}
