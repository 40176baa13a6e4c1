#include "conespectra/degseq.hpp"
#include "conespectra/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace conespectra {

namespace {

std::string seq_to_string(const Sequence& s) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    out << ')';
    return out.str();
}

bool non_increasing(const Sequence& s) {
    return std::is_sorted(s.rbegin(), s.rend());
}

} // namespace

std::string to_string(SeqCase c) {
    switch (c) {
        case SeqCase::C401: return "4.0.1";
        case SeqCase::C411: return "4.1.1";
        case SeqCase::C412: return "4.1.2";
        case SeqCase::C421: return "4.2.1";
        case SeqCase::C422: return "4.2.2";
        case SeqCase::C423: return "4.2.3";
        case SeqCase::C424: return "4.2.4";
    }
    return "?";
}

std::optional<SeqCase> seq_case_from_string(const std::string& s) {
    for (SeqCase c : {SeqCase::C401, SeqCase::C411, SeqCase::C412, SeqCase::C421,
                      SeqCase::C422, SeqCase::C423, SeqCase::C424}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

SeqCase classify_reduced(const Sequence& p, int c) {
    const int l = static_cast<int>(p.size());
    if (l == 0) fail("RangeError", "empty reduced sequence");
    if (p.front() > l - 1)
        fail("NoCaseMatch", "max reduced degree " + std::to_string(p.front()) +
                                " exceeds " + std::to_string(l - 1));

    const bool all_two = std::all_of(p.begin(), p.end(), [](int d) { return d == 2; });
    const bool tail_two = l >= 2 && std::all_of(p.begin() + 1, p.end(), [](int d) { return d == 2; });

    switch (c) {
        case 0:
            if (l >= 2 && p.back() == 1) return SeqCase::C401;
            break;
        case 1:
            if (l >= 3 && all_two) return SeqCase::C411;
            if (l >= 4 && p[0] >= 3 && p[2] >= 2 && p.back() == 1) return SeqCase::C412;
            break;
        case 2:
            if (l >= 5 && p[0] == 4 && tail_two) return SeqCase::C421;
            if (l >= 4 && p[0] == 3 && p[1] == 3 &&
                std::all_of(p.begin() + 2, p.end(), [](int d) { return d == 2; }))
                return SeqCase::C422;
            if (l >= 6 && p[0] >= 5 && p[1] == 2 && p[4] == 2 && p.back() == 1)
                return SeqCase::C423;
            if (l >= 5 && p[1] >= 3 && p[3] >= 2 && p.back() == 1) return SeqCase::C424;
            break;
        default:
            fail("RangeError", "cyclomatic number must be 0, 1 or 2");
    }
    fail("NoCaseMatch", "reduced sequence " + seq_to_string(p) +
                            " fits no c=" + std::to_string(c) + " shape");
}

ConeSequence classify(const Sequence& pi, int t, int c) {
    if (c < 0 || c > 2) fail("RangeError", "cyclomatic number must be 0, 1 or 2");
    const int n = static_cast<int>(pi.size());
    if (n < 2) fail("RangeError", "need at least 2 entries");
    if (t < 0 || t > n - 2) fail("RangeError", "apex count t must lie in [0, n-2]");
    if (!non_increasing(pi)) fail("RangeError", "sequence must be non-increasing");
    if (pi.back() < 1 || pi.front() > n - 1)
        fail("RangeError", "entries must lie in [1, n-1]");

    for (int i = 0; i < t; ++i)
        if (pi[i] != n - 1)
            fail("NotConeSequence", "entry " + std::to_string(i + 1) + " is " +
                                        std::to_string(pi[i]) + ", expected " +
                                        std::to_string(n - 1));

    Sequence red(pi.begin() + t, pi.end());
    for (int& d : red) d -= t;
    if (red.back() < 1)
        fail("NoCaseMatch", "minimum reduced degree is " + std::to_string(red.back()));

    const int l = n - t;
    const long want = 2L * (l + c - 1);
    const long sum = std::accumulate(red.begin(), red.end(), 0L);
    if (sum != want)
        fail("WrongEdgeCount", "reduced degree sum " + std::to_string(sum) +
                                   ", expected " + std::to_string(want));

    ConeSequence out;
    out.pi = pi;
    out.n = n;
    out.t = t;
    out.c = c;
    out.kind = classify_reduced(red, c);
    return out;
}

Sequence reduce(const Sequence& pi, int t) {
    if (t < 0 || t >= static_cast<int>(pi.size()))
        fail("RangeError", "apex count out of range");
    Sequence red(pi.begin() + t, pi.end());
    for (int& d : red) d -= t;
    return red;
}

Sequence reduce(const ConeSequence& s) { return reduce(s.pi, s.t); }

MajOrder compare_majorization(const Sequence& y, const Sequence& z) {
    if (y.size() != z.size())
        fail("LengthMismatch", "lengths " + std::to_string(y.size()) + " vs " +
                                   std::to_string(z.size()));
    if (!non_increasing(y) || !non_increasing(z))
        fail("RangeError", "sequences must be non-increasing");
    long sy = std::accumulate(y.begin(), y.end(), 0L);
    long sz = std::accumulate(z.begin(), z.end(), 0L);
    if (sy != sz) fail("RangeError", "totals differ: " + std::to_string(sy) + " vs " +
                                         std::to_string(sz));

    if (y == z) return MajOrder::Equal;
    bool le = true, ge = true;
    long py = 0, pz = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        py += y[i];
        pz += z[i];
        if (py > pz) le = false;
        if (py < pz) ge = false;
    }
    if (le) return MajOrder::StrictlyMajorizedBy;
    if (ge) return MajOrder::StrictlyMajorizes;
    return MajOrder::Incomparable;
}

Sequence unit_transform(const Sequence& z, int i, int j) {
    const int n = static_cast<int>(z.size());
    if (i < 0 || j >= n || i >= j) fail("RangeError", "need 0 <= i < j < length");
    if (!non_increasing(z)) fail("RangeError", "sequence must be non-increasing");
    if (z[i] < z[j] + 2)
        fail("GapTooSmall", "z[i]=" + std::to_string(z[i]) + " must exceed z[j]=" +
                                std::to_string(z[j]) + " by at least 2");
    Sequence out = z;
    out[i] -= 1;
    out[j] += 1;
    if (!non_increasing(out))
        fail("OrderViolation", "transfer " + std::to_string(i) + "->" + std::to_string(j) +
                                   " breaks the ordering of " + seq_to_string(z));
    return out;
}

std::optional<std::pair<int, int>> star_positions(const Sequence& y, const Sequence& z) {
    if (y.size() != z.size()) return std::nullopt;
    if (!non_increasing(y) || !non_increasing(z)) return std::nullopt;
    int p = -1, q = -1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == z[i]) continue;
        if (z[i] == y[i] + 1 && p < 0)
            p = static_cast<int>(i);
        else if (z[i] == y[i] - 1 && q < 0)
            q = static_cast<int>(i);
        else
            return std::nullopt;
    }
    if (p < 0 || q < 0 || p >= q) return std::nullopt;
    return std::make_pair(p, q);
}

MajorizationChain star_chain(const Sequence& pi, const Sequence& pi_prime, int t, int c) {
    classify(pi, t, c);
    classify(pi_prime, t, c);
    if (compare_majorization(pi, pi_prime) != MajOrder::StrictlyMajorizedBy)
        fail("NotMajorized", seq_to_string(pi) + " does not come strictly before " +
                                 seq_to_string(pi_prime));

    // Walk downward from pi_prime: each unit transform strictly lowers the
    // sequence, so the explored region is the interval between the two
    // endpoints intersected with the family.
    struct Node {
        Sequence seq;
        int parent;
        std::pair<int, int> move;  // (subtract_at, add_at), downward
    };
    std::vector<Node> nodes;
    std::map<Sequence, int> seen;
    nodes.push_back({pi_prime, -1, {-1, -1}});
    seen.emplace(pi_prime, 0);

    const int n = static_cast<int>(pi.size());
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        Sequence cur = nodes[head].seq;  // copy: nodes may reallocate below
        if (cur == pi) {
            std::vector<Sequence> down;
            std::vector<std::pair<int, int>> down_moves;
            for (int at = static_cast<int>(head); at != -1; at = nodes[at].parent) {
                down.push_back(nodes[at].seq);
                if (nodes[at].parent != -1) down_moves.push_back(nodes[at].move);
            }
            // down runs pi -> pi_prime already (we walked parents upward);
            // each recorded move (i, j) means child = parent - e_i + e_j,
            // i.e. parent = child + e_i - e_j, matching the ascending chain.
            MajorizationChain chain;
            chain.sequences = std::move(down);
            chain.moves = std::move(down_moves);
            return chain;
        }
        for (int i = t; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (cur[i] < cur[j] + 2) continue;
                Sequence next = cur;
                next[i] -= 1;
                next[j] += 1;
                if (!non_increasing(next)) continue;
                if (seen.count(next)) continue;
                try {
                    classify(next, t, c);
                } catch (const Error&) {
                    continue;
                }
                MajOrder rel = compare_majorization(pi, next);
                if (rel != MajOrder::Equal && rel != MajOrder::StrictlyMajorizedBy) continue;
                seen.emplace(next, static_cast<int>(nodes.size()));
                nodes.push_back({std::move(next), static_cast<int>(head), {i, j}});
            }
        }
    }
    fail("NoValidChain", "no unit-transfer chain inside the family joins " +
                             seq_to_string(pi) + " to " + seq_to_string(pi_prime));
}

bool is_exceptional_pair(const Sequence& pi, const Sequence& pi_prime, int t, int n) {
    if (static_cast<int>(pi.size()) != n || static_cast<int>(pi_prime.size()) != n) return false;
    if (t < 0 || n - t < 6) return false;
    for (int k = 1; k <= n - t - 5; ++k) {
        Sequence a(t, n - 1), b(t, n - 1);
        a.push_back(t + k + 3);
        a.push_back(t + 3);
        a.insert(a.end(), n - t - k - 2, t + 2);
        a.insert(a.end(), k, t + 1);
        b.push_back(t + k + 4);
        b.insert(b.end(), n - t - k - 1, t + 2);
        b.insert(b.end(), k, t + 1);
        if (pi == a && pi_prime == b) return true;
    }
    return false;
}

namespace {

void gen_partitions(int remaining, int slots, int max_part, Sequence& cur,
                    std::vector<Sequence>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    // Entries stay >= 1 and non-increasing; descending choice of the next
    // part yields descending lexicographic output order.
    int hi = std::min(max_part, remaining - (slots - 1));
    for (int v = hi; v >= 1; --v) {
        if (v * slots < remaining) break;  // even repeating v cannot reach the sum
        cur.push_back(v);
        gen_partitions(remaining - v, slots - 1, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ConeSequence> enumerate_sequences(int n, int t, int c) {
    if (c < 0 || c > 2) fail("RangeError", "cyclomatic number must be 0, 1 or 2");
    if (t < 0) fail("RangeError", "apex count must be non-negative");
    const int l = n - t;
    if (l < c + 3)
        fail("RangeError", "need n - t >= " + std::to_string(c + 3) +
                               " for a family with more than one member");

    std::vector<Sequence> reduced;
    Sequence cur;
    gen_partitions(2 * (l + c - 1), l, l - 1, cur, reduced);

    std::vector<ConeSequence> out;
    for (const Sequence& red : reduced) {
        Sequence pi(t, n - 1);
        for (int d : red) pi.push_back(d + t);
        try {
            out.push_back(classify(pi, t, c));
        } catch (const Error&) {
            // sum and bounds hold by construction; this drops only shapes
            // outside the classification (e.g. non-realizable ones)
        }
    }
    return out;
}

} // namespace conespectra
