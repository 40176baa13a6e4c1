#pragma once

#include "conespectra/construct.hpp"
#include "conespectra/degseq.hpp"
#include "conespectra/graph.hpp"
#include "conespectra/spectral.hpp"

#include <vector>

namespace conespectra {

// Every connected graph with the given degree sequence, one representative
// per isomorphism class, in deterministic (search) order. Unrealizable but
// well-formed sequences give an empty list. Throws TooLarge when the length
// exceeds limit, RangeError for malformed input.
std::vector<Graph> realize_all(const Sequence& pi_star, int limit = 9);

// Brute-force argmax of theta over the whole family of the sequence:
// enumerate the realizations of the reduced sequence, join each with the
// apexes, compare. Throws EmptyFamily when no realization exists, TooLarge
// past the limit.
struct OracleResult {
    ConeGraph best;
    PerronResult perron;
    bool unique = true;          // best beats every rival class by > margin
    double gap_to_second = 0.0;  // meaningless when family_size == 1
    int family_size = 0;
};

OracleResult oracle_maximal(const ConeSequence& s, double alpha, int limit = 9,
                            double margin = 1e-9);
// Same, for a reduced sequence that need not classify (any cyclomatic
// number); the full sequence is the reduced one lifted by t behind t apexes.
OracleResult oracle_maximal_reduced(const Sequence& pi_star, int t, double alpha,
                                    int limit = 9, double margin = 1e-9);

// One adjacent (single unit-transfer) pair whose brute-force maxima do NOT
// satisfy the strict increase by more than margin.
struct PairFinding {
    Sequence pi, pi_prime;  // full sequences, pi strictly before pi_prime
    double theta_pi = 0.0, theta_pi_prime = 0.0;
    ConeGraph best_pi, best_pi_prime;
};

// Scans every adjacent pair of realizable cone sequences for (n, t, c) and
// reports those where theta(best of pi) + margin >= theta(best of pi_prime).
// For c <= 2 the family comes from the classification; for c >= 3 it is every
// lifted partition with at least one connected realization.
std::vector<PairFinding> counterexample_search(int n, int t, int c, double alpha,
                                               int limit = 9, double margin = 1e-9);

} // namespace conespectra
