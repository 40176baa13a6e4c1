#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conespectra {

// Degree sequences are stored 0-indexed and non-increasing. Positions in
// reports and serialized output are 1-based; the conversion happens at the
// I/O boundary only.
using Sequence = std::vector<int>;

// Classification codes for cone degree sequences. The wire names ("4.0.1",
// ...) are stable identifiers of this library's taxonomy; each code pins the
// shape of the reduced sequence pi* (entries d_i - t for the non-apex part):
//
//   C401  c=0  any tree shape: min entry 1, sum 2(l-1)
//   C411  c=1  all entries 2 (a pure cycle)
//   C412  c=1  pi*_1 >= 3, pi*_2 >= pi*_3 >= 2, trailing entries end at 1
//   C421  c=2  (4, 2, 2, ..., 2): two cycles sharing one vertex
//   C422  c=2  (3, 3, 2, ..., 2): two branch vertices, no pendants
//   C423  c=2  pi*_1 >= 5, pi*_2..pi*_5 = 2, tail in {1,2} ending at 1
//   C424  c=2  pi*_1 >= pi*_2 >= 3, pi*_3 >= pi*_4 >= 2, tail ends at 1
enum class SeqCase { C401, C411, C412, C421, C422, C423, C424 };

std::string to_string(SeqCase c);
std::optional<SeqCase> seq_case_from_string(const std::string& s);

// A validated t-cone c-cyclic degree sequence: t apex entries equal to n-1
// followed by the degrees of the rest, whose reduced form sums to
// 2((n-t) + c - 1) and matches one of the shapes above.
struct ConeSequence {
    Sequence pi;   // full sequence, length n, non-increasing
    int n = 0;
    int t = 0;
    int c = 0;
    SeqCase kind = SeqCase::C401;
};

// Validates and classifies. Throws Error with kind:
//   RangeError      c not in {0,1,2} or t out of [0, n-2], or pi not
//                   non-increasing positive
//   NotConeSequence first t entries not all n-1
//   WrongEdgeCount  reduced sum != 2((n-t) + c - 1)
//   NoCaseMatch     valid sum but no classification shape fits
ConeSequence classify(const Sequence& pi, int t, int c);

// Reduced sequence: drops the t apex entries and subtracts t from the rest.
Sequence reduce(const ConeSequence& s);
Sequence reduce(const Sequence& pi, int t);

// Classifies an already-reduced sequence (as produced by reduce). The length
// bound per case stands in for the t-range conditions of classify.
SeqCase classify_reduced(const Sequence& pi_star, int c);

enum class MajOrder {
    Equal,
    StrictlyMajorizedBy,  // y comes before z: every prefix sum of y <= z's
    StrictlyMajorizes,
    Incomparable,
};

// Prefix-sum comparison of two non-increasing sequences of the same length
// and total. Throws LengthMismatch / RangeError on malformed input.
MajOrder compare_majorization(const Sequence& y, const Sequence& z);

// Subtract 1 at position i and add 1 at position j (i < j, z[i] >= z[j]+2),
// keeping the sequence non-increasing. The result is strictly below z in
// majorization order. Throws GapTooSmall / OrderViolation / RangeError.
Sequence unit_transform(const Sequence& z, int i, int j);

// If y is obtained from z by a single unit transform (equivalently, the two
// differ in exactly two positions, by +1 and -1), returns the 0-based pair
// (p, q) with y[p] + 1 == z[p] and y[q] - 1 == z[q], p < q. Otherwise empty.
std::optional<std::pair<int, int>> star_positions(const Sequence& y, const Sequence& z);

// A chain pi = seq[0], seq[1], ..., seq[k] = pi_prime where each consecutive
// pair differs by one unit transfer: seq[i+1] = seq[i] + e_p - e_q with
// moves[i] = (p, q), 0-based. Every element classifies under the same
// (t, c), so the whole chain stays inside one cone family.
struct MajorizationChain {
    std::vector<Sequence> sequences;
    std::vector<std::pair<int, int>> moves;  // moves.size() + 1 == sequences.size()
};

// Shortest such chain, found by breadth-first search over unit transforms
// that keep the sequence inside the family and above pi. Throws NotMajorized
// if pi does not come strictly before pi_prime, NoValidChain if the search
// exhausts without connecting them.
MajorizationChain star_chain(const Sequence& pi, const Sequence& pi_prime, int t, int c);

// Recognizes the one family of adjacent bicyclic pairs excluded from the
// strict spectral comparison: for some k in [1, n-t-5],
//   pi       = ((n-1)^t, t+k+3, t+3, (t+2)^(n-t-k-2), (t+1)^k)
//   pi_prime = ((n-1)^t, t+k+4, (t+2)^(n-t-k-1), (t+1)^k)
bool is_exceptional_pair(const Sequence& pi, const Sequence& pi_prime, int t, int n);

// All valid cone degree sequences for (n, t, c), in descending lexicographic
// order. Requires n - t >= c + 3 (below that the family has at most one
// member); throws RangeError otherwise.
std::vector<ConeSequence> enumerate_sequences(int n, int t, int c);

} // namespace conespectra
