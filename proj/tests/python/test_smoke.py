import math

import pytest

import conespectra as cs


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def test_theta_regular():
    r = cs.theta(5, cycle(5), alpha=1.0)
    assert r["theta"] == pytest.approx(4.0, abs=1e-10)
    assert r["residual"] <= 1e-10
    assert all(w > 0 for w in r["weights"])


def test_theta_path_closed_form():
    r = cs.theta(4, [(0, 1), (1, 2), (2, 3)], alpha=0.0)
    assert r["theta"] == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-10)


def test_classify_running_example():
    pi = [18, 18, 6, 6, 5, 5, 5, 5, 4] + [3] * 10
    s = cs.classify(pi, t=2, c=0)
    assert s["case"] == "4.0.1"
    assert s["n"] == 19

    with pytest.raises(ValueError):
        cs.classify([3, 3, 3, 1], 0, 0)


def test_construct_realizes_the_sequence():
    pi = [4, 3, 2, 2, 2, 1]
    g = cs.construct(pi, t=0, c=2)
    degrees = [0] * g["n"]
    for u, v in g["edges"]:
        degrees[u] += 1
        degrees[v] += 1
    assert sorted(degrees, reverse=True) == pi
    assert len(g["layers"]) >= 2


def test_oracle_and_majorization():
    r = cs.oracle([3, 2, 2, 2, 1], t=0, c=1, alpha=0.0)
    assert r["family_size"] == 2
    assert r["unique"]

    rep = cs.verify_majorization([2, 2, 1, 1], [3, 1, 1, 1], t=0, c=0, alpha=0.0,
                                 oracle_limit=9)
    assert rep["verdict"] == "holds"
    assert rep["min_margin"] == pytest.approx(math.sqrt(3) - (1 + math.sqrt(5)) / 2,
                                              abs=1e-9)


def test_chain_and_enumeration():
    seqs = cs.enumerate_sequences(4, 0, 0)
    assert seqs == [[3, 1, 1, 1], [2, 2, 1, 1]]

    chain = cs.star_chain([2, 2, 1, 1], [3, 1, 1, 1], t=0, c=0)
    assert chain["sequences"][0] == [2, 2, 1, 1]
    assert chain["sequences"][-1] == [3, 1, 1, 1]


def test_graph6_round_trip():
    n, edges = cs.from_graph6(cs.to_graph6(5, cycle(5)))
    assert n == 5
    assert sorted(edges) == sorted(tuple(sorted(e)) for e in cycle(5))


def test_search_is_clean_at_small_scale():
    assert cs.search_counterexample(6, 0, 2, alpha=0.0) == []
