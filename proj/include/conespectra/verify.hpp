#pragma once

#include "conespectra/degseq.hpp"
#include "conespectra/graph.hpp"
#include "conespectra/spectral.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conespectra {

enum class Verdict { Holds, Violated, Inconclusive };

std::string to_string(Verdict v);

// Outcome of one structural or spectral check. Violated reports always carry
// enough of a witness (serialized graphs, weights, parameters) to replay the
// instance; min_margin is the smallest strict gap the verdict rests on.
struct TheoremReport {
    std::string check;  // stable id, e.g. "5.6" (see the id catalog in the README)
    Verdict verdict = Verdict::Holds;
    std::string detail;
    nlohmann::json witness = nlohmann::json::object();
    double min_margin = 0.0;
};

// Is there a vertex order v_1, v_2, ... with non-increasing degrees,
// non-decreasing BFS levels (levels measured from v_1), and the cross-level
// precedence rule: when u comes before x in one level, every neighbor that u
// alone has in the next level comes before every neighbor that x alone has
// there? Returns such an order, or nothing. Throws Disconnected.
std::optional<std::vector<int>> check_bfs_graph(const Graph& h);

// The weighted refinement for an apex graph: degrees, dominant-eigenvector
// weights and levels must be sortable simultaneously (weights within the
// non-apex part, levels from the heaviest vertex), heavier degree must mean
// strictly heavier weight, and for same-level pairs the order of private
// next-level neighbors must mirror the weight order exactly. tol is relative
// to the largest weight. Returns the order of the non-apex part (h labels).
std::optional<std::vector<int>> check_good_cone_bfs(const ConeGraph& g, double alpha,
                                                    double tol = 1e-9);

// Weight laws on one apex graph, all verified against the computed dominant
// eigenvector: strictly larger degree forces strictly larger weight (any two
// vertices); all vertices of degree n-1 share one weight; every 2-core
// vertex of the non-apex part outweighs every non-core one; inside the
// 2-core, larger core degree forces larger weight.
TheoremReport check_weight_laws(const ConeGraph& g, double alpha, double tol = 1e-9);

// Internal path laws for an apex graph whose non-apex part has a cycle and a
// pendant vertex (otherwise Inconclusive): closed internal paths are
// triangles; open ones have at most 2 edges; and a 2-edge open path u1-u2-u3
// needs the chord u1u3 (in the non-apex part), or, within the 2-core, the
// alternative that every pendant vertex hangs from u2.
TheoremReport check_internal_paths(const ConeGraph& g);

struct SurprisingVertex {
    int w = -1;             // h-local vertex label
    std::vector<int> path;  // a shortest v_p .. v_q path (h labels) avoiding w
};

// Given the good order of the non-apex part and two 1-based positions
// t+1 <= p < q <= n, looks for a neighbor w of v_q that is not v_p, not
// adjacent to v_p, and avoidable by some shortest v_p..v_q path. Throws
// RangeError / LengthMismatch on malformed arguments.
std::optional<SurprisingVertex> find_surprising_vertex(const ConeGraph& g, int p, int q,
                                                       const std::vector<int>& ordering);

// Strict spectral comparison of the two family maxima when pi comes
// strictly before pi_prime (error NotMajorized otherwise). The known
// exceptional two-cycle family reports Inconclusive with the measured gap
// instead of asserting. When n - t <= oracle_limit the constructed maxima
// are also cross-checked against the brute-force argmax.
TheoremReport verify_majorization(const Sequence& pi, const Sequence& pi_prime, int t,
                                  int c, double alpha, int oracle_limit = 0,
                                  double margin = 1e-9);

// Named sweep: runs the check with the given id over every instance for
// (n, t, alpha); see the README for the id catalog. c is only used by ids
// that do not imply it. samples caps the shift/switch instances for the
// transform-law ids. Throws RangeError for unknown ids.
std::vector<TheoremReport> run_check(const std::string& id, int n, int t, int c,
                                     double alpha, int oracle_limit = 9,
                                     double margin = 1e-9, int samples = 200);

} // namespace conespectra
