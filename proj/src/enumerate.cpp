#include "conespectra/enumerate.hpp"
#include "conespectra/errors.hpp"
#include "conespectra/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace conespectra {

namespace {

// Backtracking realization of a fixed degree sequence. Vertices are handled
// in id order; when vertex u comes up, all its still-open edges must go to
// later vertices. Candidates that look alike at that moment (same open
// degree, same neighbors among decided vertices) are interchangeable, so
// only prefix picks inside such a block are explored; that skips isomorphic
// duplicates without losing any class. Final dedup still runs through
// canonical forms.
struct RealizeSearch {
    const Sequence& target;
    int l;
    std::vector<unsigned> adj;  // bitmask adjacency
    std::vector<int> rem;
    std::map<std::vector<std::pair<int, int>>, bool> seen;
    std::vector<Graph> out;

    explicit RealizeSearch(const Sequence& t)
        : target(t), l(static_cast<int>(t.size())), adj(t.size(), 0),
          rem(t.begin(), t.end()) {}

    void finish() {
        Graph g(l);
        for (int u = 0; u < l; ++u)
            for (int v = u + 1; v < l; ++v)
                if (adj[u] >> v & 1u) g.add_edge(u, v);
        if (!g.connected()) return;
        auto key = canonical_form(g);
        if (seen.emplace(std::move(key), true).second) out.push_back(std::move(g));
    }

    bool feasible(int u) const {
        int active = 0;
        for (int v = u; v < l; ++v)
            if (rem[v] > 0) ++active;
        for (int v = u; v < l; ++v)
            if (rem[v] > 0 && rem[v] > active - 1) return false;
        return true;
    }

    void pick(int u, const std::vector<std::vector<int>>& blocks, std::size_t bi, int need,
              std::vector<int>& chosen) {
        if (need == 0) {
            for (int v : chosen) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
                --rem[v];
            }
            int save = rem[u];
            rem[u] = 0;
            if (feasible(u + 1)) place(u + 1);
            rem[u] = save;
            for (int v : chosen) {
                adj[u] &= ~(1u << v);
                adj[v] &= ~(1u << u);
                ++rem[v];
            }
            return;
        }
        if (bi == blocks.size()) return;
        int left = 0;  // capacity of the remaining blocks
        for (std::size_t b = bi + 1; b < blocks.size(); ++b)
            left += static_cast<int>(blocks[b].size());
        int hi = std::min<int>(need, static_cast<int>(blocks[bi].size()));
        for (int take = hi; take >= 0; --take) {
            if (need - take > left) break;
            for (int i = 0; i < take; ++i) chosen.push_back(blocks[bi][i]);
            pick(u, blocks, bi + 1, need - take, chosen);
            for (int i = 0; i < take; ++i) chosen.pop_back();
        }
    }

    void place(int u) {
        if (u == l) {
            finish();
            return;
        }
        if (rem[u] == 0) {
            place(u + 1);
            return;
        }
        // group the candidates by (open degree, decided adjacency)
        std::map<std::pair<int, unsigned>, std::vector<int>> groups;
        unsigned low_mask = (1u << u) - 1u;
        for (int v = u + 1; v < l; ++v)
            if (rem[v] > 0) groups[{rem[v], adj[v] & low_mask}].push_back(v);
        std::vector<std::vector<int>> blocks;
        std::map<int, std::pair<int, unsigned>> order;  // smallest id decides block order
        for (auto& kv : groups) order.emplace(kv.second.front(), kv.first);
        for (auto& kv : order) blocks.push_back(groups.at(kv.second));

        std::vector<int> chosen;
        pick(u, blocks, 0, rem[u], chosen);
    }
};

} // namespace

std::vector<Graph> realize_all(const Sequence& pi_star, int limit) {
    const int l = static_cast<int>(pi_star.size());
    if (l == 0) fail("RangeError", "empty sequence");
    if (l > limit || l > 31)
        fail("TooLarge", std::to_string(l) + " vertices exceed the exhaustive limit " +
                             std::to_string(std::min(limit, 31)));
    if (!std::is_sorted(pi_star.rbegin(), pi_star.rend()) || pi_star.back() < 1)
        fail("RangeError", "sequence must be non-increasing and positive");

    if (pi_star.front() > l - 1) return {};
    if (std::accumulate(pi_star.begin(), pi_star.end(), 0L) % 2 != 0) return {};

    RealizeSearch search(pi_star);
    if (!search.feasible(0)) return {};
    search.place(0);
    return std::move(search.out);
}

namespace {

OracleResult oracle_over(const std::vector<Graph>& classes, int t, double alpha,
                         double margin) {
    if (classes.empty()) fail("EmptyFamily", "no connected realization exists");
    const double tol = std::min(1e-12, margin / 10.0);
    OracleResult res;
    res.family_size = static_cast<int>(classes.size());
    double best = -1.0, second = -std::numeric_limits<double>::infinity();
    int best_at = -1;
    std::vector<PerronResult> perron(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        ConeGraph cg = join_cone(t, classes[i]);
        perron[i] = theta(cg.full, alpha, tol);
        if (perron[i].theta > best) {
            second = best;
            best = perron[i].theta;
            best_at = static_cast<int>(i);
        } else {
            second = std::max(second, perron[i].theta);
        }
    }
    res.best = join_cone(t, classes[best_at]);
    res.perron = perron[best_at];
    res.gap_to_second = best - second;
    res.unique = classes.size() == 1 || res.gap_to_second > margin;
    return res;
}

} // namespace

OracleResult oracle_maximal(const ConeSequence& s, double alpha, int limit, double margin) {
    return oracle_over(realize_all(reduce(s), limit), s.t, alpha, margin);
}

OracleResult oracle_maximal_reduced(const Sequence& pi_star, int t, double alpha, int limit,
                                    double margin) {
    if (t < 0) fail("RangeError", "negative apex count");
    return oracle_over(realize_all(pi_star, limit), t, alpha, margin);
}

namespace {

void partitions(int remaining, int slots, int max_part, Sequence& cur,
                std::vector<Sequence>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int hi = std::min(max_part, remaining - (slots - 1));
    for (int v = hi; v >= 1; --v) {
        if (v * slots < remaining) break;
        cur.push_back(v);
        partitions(remaining - v, slots - 1, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<PairFinding> counterexample_search(int n, int t, int c, double alpha, int limit,
                                               double margin) {
    if (c < 0) fail("RangeError", "negative cyclomatic number");
    if (t < 0 || n - t < 2) fail("RangeError", "need t >= 0 and n - t >= 2");
    const int l = n - t;
    if (l > limit)
        fail("TooLarge", std::to_string(l) + " non-apex vertices exceed limit " +
                             std::to_string(limit));

    // families: reduced sequences with at least one connected realization
    std::vector<Sequence> reduced;
    if (c <= 2) {
        for (const ConeSequence& s : enumerate_sequences(n, t, c)) reduced.push_back(reduce(s));
    } else {
        std::vector<Sequence> candidates;
        Sequence cur;
        partitions(2 * (l + c - 1), l, l - 1, cur, candidates);
        reduced = std::move(candidates);
    }

    std::vector<OracleResult> oracles(reduced.size());
    std::vector<char> realizable(reduced.size(), 0);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Graph> classes = realize_all(reduced[i], limit);
        if (classes.empty()) continue;
        oracles[i] = oracle_over(classes, t, alpha, margin);
        realizable[i] = 1;
    }

    std::vector<PairFinding> findings;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (!realizable[i]) continue;
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            if (i == j || !realizable[j]) continue;
            // adjacent pair with reduced[i] strictly before reduced[j]
            if (!star_positions(reduced[i], reduced[j])) continue;
            if (oracles[i].perron.theta + margin < oracles[j].perron.theta) continue;

            PairFinding f;
            f.pi.assign(t, n - 1);
            for (int d : reduced[i]) f.pi.push_back(d + t);
            f.pi_prime.assign(t, n - 1);
            for (int d : reduced[j]) f.pi_prime.push_back(d + t);
            f.theta_pi = oracles[i].perron.theta;
            f.theta_pi_prime = oracles[j].perron.theta;
            f.best_pi = oracles[i].best;
            f.best_pi_prime = oracles[j].best;
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

} // namespace conespectra
