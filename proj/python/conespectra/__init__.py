"""Spectral maxima of apex degree sequence families.

Thin wrapper over the C++ core: classification and enumeration of t-cone
c-cyclic degree sequences, construction of the theta-maximal graph of a
family, dominant eigenpairs of A + alpha*D, and the brute-force oracle and
named checks used to verify the structural laws at small scale.

Vertices and sequence positions are 0-based throughout this module.
"""

from ._core import (
    classify,
    construct,
    enumerate_sequences,
    from_graph6,
    oracle,
    run_check,
    search_counterexample,
    star_chain,
    theta,
    to_graph6,
    verify_majorization,
)

__all__ = [
    "classify",
    "construct",
    "enumerate_sequences",
    "from_graph6",
    "oracle",
    "run_check",
    "search_counterexample",
    "star_chain",
    "theta",
    "to_graph6",
    "verify_majorization",
]
