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

} // namespace

TEST_CASE("classification of the three running examples") {
    // tree shape behind two apexes
    Sequence pi1 = cat({18, 18, 6, 6, 5, 5, 5, 5, 4}, 3, 10);
    ConeSequence s1 = classify(pi1, 2, 0);
    CHECK(s1.kind == SeqCase::C401);
    CHECK(to_string(s1.kind) == "4.0.1");
    CHECK(s1.n == 19);
    CHECK(reduce(s1) == cat({4, 4, 3, 3, 3, 3, 2}, 1, 10));

    // one cycle
    Sequence pi3 = cat({16, 16, 6, 6, 5, 5, 5, 5, 4}, 3, 8);
    CHECK(classify(pi3, 2, 1).kind == SeqCase::C412);

    // two cycles
    Sequence pi4 = cat({14, 14, 6, 6, 5, 5, 5, 5, 4}, 3, 6);
    CHECK(classify(pi4, 2, 2).kind == SeqCase::C424);
}

TEST_CASE("classification by shape") {
    CHECK(classify({2, 2, 2}, 0, 1).kind == SeqCase::C411);
    CHECK(classify({3, 2, 2, 2, 1}, 0, 1).kind == SeqCase::C412);
    CHECK(classify({4, 2, 2, 2, 2}, 0, 2).kind == SeqCase::C421);
    CHECK(classify({3, 3, 2, 2}, 0, 2).kind == SeqCase::C422);
    CHECK(classify({5, 2, 2, 2, 2, 1}, 0, 2).kind == SeqCase::C423);
    CHECK(classify({4, 3, 2, 2, 2, 1}, 0, 2).kind == SeqCase::C424);
    CHECK(classify({2, 2, 1, 1}, 0, 0).kind == SeqCase::C401);

    CHECK(seq_case_from_string("4.2.3") == SeqCase::C423);
    CHECK(!seq_case_from_string("9.9.9").has_value());
}

TEST_CASE("classification rejections carry the right kind") {
    CHECK(thrown_kind([] { classify({2, 2, 1, 1}, 0, 3); }) == "RangeError");
    CHECK(thrown_kind([] { classify({2, 1, 2, 1}, 0, 0); }) == "RangeError");
    CHECK(thrown_kind([] { classify({2, 2, 1, 1}, 3, 0); }) == "RangeError");
    CHECK(thrown_kind([] { classify({3, 3, 2, 2, 2}, 1, 1); }) == "NotConeSequence");
    CHECK(thrown_kind([] { classify({3, 3, 3, 1}, 0, 0); }) == "WrongEdgeCount");
    // apex-degree entries in the tail reduce to zero
    CHECK(thrown_kind([] { classify({4, 4, 4, 4, 1}, 1, 0); }) == "NoCaseMatch");
    // right edge count, no unicyclic shape (only two entries >= 2)
    CHECK(thrown_kind([] { classify({5, 3, 1, 1, 1, 1}, 0, 1); }) == "NoCaseMatch");
}

TEST_CASE("majorization comparison via prefix sums") {
    CHECK(compare_majorization({3, 1, 1, 1}, {2, 2, 1, 1}) == MajOrder::StrictlyMajorizes);
    CHECK(compare_majorization({2, 2, 1, 1}, {3, 1, 1, 1}) == MajOrder::StrictlyMajorizedBy);
    CHECK(compare_majorization({2, 2, 1, 1}, {2, 2, 1, 1}) == MajOrder::Equal);
    CHECK(compare_majorization({4, 4, 1, 1, 1, 1}, {5, 2, 2, 1, 1, 1}) ==
          MajOrder::Incomparable);
    CHECK(thrown_kind([] { compare_majorization({2, 1}, {1, 1, 1}); }) == "LengthMismatch");
}

TEST_CASE("unit transforms") {
    CHECK(unit_transform({3, 1, 1, 1}, 0, 1) == Sequence{2, 2, 1, 1});
    CHECK(unit_transform({3, 2, 2, 1}, 0, 3) == Sequence{2, 2, 2, 2});
    CHECK(thrown_kind([] { unit_transform({2, 2, 1, 1}, 0, 1); }) == "GapTooSmall");
    CHECK(thrown_kind([] { unit_transform({3, 2, 2, 1}, 1, 2); }) == "GapTooSmall");
    CHECK(thrown_kind([] { unit_transform({3, 3, 1, 1}, 0, 2); }) == "OrderViolation");
    CHECK(thrown_kind([] { unit_transform({3, 1, 1, 1}, 1, 0); }) == "RangeError");
}

TEST_CASE("star positions") {
    auto p = star_positions({2, 2, 1, 1}, {3, 1, 1, 1});
    REQUIRE(p.has_value());
    CHECK(p->first == 0);
    CHECK(p->second == 1);
    CHECK(!star_positions({2, 2, 2, 1, 1}, {4, 1, 1, 1, 1}).has_value());
    CHECK(!star_positions({2, 2, 1, 1}, {2, 2, 1, 1}).has_value());
}

TEST_CASE("stepwise chains") {
    MajorizationChain mc = star_chain({2, 2, 2, 1, 1}, {4, 1, 1, 1, 1}, 0, 0);
    REQUIRE(mc.sequences.size() == 3);
    CHECK(mc.sequences[0] == Sequence{2, 2, 2, 1, 1});
    CHECK(mc.sequences[1] == Sequence{3, 2, 1, 1, 1});
    CHECK(mc.sequences[2] == Sequence{4, 1, 1, 1, 1});
    REQUIRE(mc.moves.size() == 2);
    // 0-based positions: (subtract here, add there) going downward
    CHECK(mc.moves[0] == std::pair<int, int>{0, 2});
    CHECK(mc.moves[1] == std::pair<int, int>{0, 1});

    // adjacent pair: one step, inside the one-cycle family
    MajorizationChain one = star_chain({3, 2, 2, 2, 1}, {3, 3, 2, 1, 1}, 0, 1);
    REQUIRE(one.sequences.size() == 2);
    CHECK(one.moves[0] == std::pair<int, int>{1, 3});
    for (const Sequence& s : one.sequences) CHECK(classify(s, 0, 1).c == 1);

    CHECK(thrown_kind([] { star_chain({3, 1, 1, 1}, {2, 2, 1, 1}, 0, 0); }) == "NotMajorized");
}

TEST_CASE("the excluded two-cycle pair family") {
    CHECK(is_exceptional_pair({4, 3, 2, 2, 2, 1}, {5, 2, 2, 2, 2, 1}, 0, 6));
    // one apex, k = 1
    CHECK(is_exceptional_pair({6, 5, 4, 3, 3, 3, 2}, {6, 6, 3, 3, 3, 3, 2}, 1, 7));
    CHECK(!is_exceptional_pair({3, 3, 2, 2}, {4, 2, 2, 2}, 0, 4));
    CHECK(!is_exceptional_pair({4, 3, 2, 2, 2, 1}, {4, 3, 2, 2, 2, 1}, 0, 6));
}

TEST_CASE("family enumeration") {
    std::vector<ConeSequence> f0 = enumerate_sequences(4, 0, 0);
    REQUIRE(f0.size() == 2);
    CHECK(f0[0].pi == Sequence{3, 1, 1, 1});  // descending lexicographic order
    CHECK(f0[1].pi == Sequence{2, 2, 1, 1});

    std::vector<ConeSequence> f1 = enumerate_sequences(5, 1, 0);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].pi == Sequence{4, 4, 2, 2, 2});
    CHECK(f1[1].pi == Sequence{4, 3, 3, 2, 2});

    CHECK(enumerate_sequences(6, 0, 0).size() == 5);
    CHECK(enumerate_sequences(7, 1, 1).size() == 7);

    for (const ConeSequence& s : enumerate_sequences(8, 1, 2)) {
        ConeSequence back = classify(s.pi, 1, 2);  // round trip
        CHECK(back.kind == s.kind);
    }

    CHECK(thrown_kind([] { enumerate_sequences(4, 0, 2); }) == "RangeError");
    CHECK(thrown_kind([] { enumerate_sequences(4, 2, 0); }) == "RangeError");
}

TEST_CASE("chains exist between all comparable tree sequences") {
    std::vector<ConeSequence> fam = enumerate_sequences(7, 0, 0);
    int pairs = 0;
    for (const ConeSequence& a : fam)
        for (const ConeSequence& b : fam) {
            if (compare_majorization(a.pi, b.pi) != MajOrder::StrictlyMajorizedBy) continue;
            ++pairs;
            MajorizationChain mc = star_chain(a.pi, b.pi, 0, 0);
            CHECK(mc.sequences.front() == a.pi);
            CHECK(mc.sequences.back() == b.pi);
            CHECK(mc.moves.size() + 1 == mc.sequences.size());
            for (std::size_t i = 0; i + 1 < mc.sequences.size(); ++i) {
                CHECK(star_positions(mc.sequences[i], mc.sequences[i + 1]).has_value());
                CHECK(classify(mc.sequences[i + 1], 0, 0).kind == SeqCase::C401);
            }
        }
    CHECK(pairs > 0);
}
