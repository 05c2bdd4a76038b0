"""Auxiliary graphs whose proper colorings drive the dominating-set constructions.

Two derived graphs are built on the same vertex set as the input: the
common-neighbor graph joins vertices that share a neighbor, and the closed
square additionally keeps the original edges (i.e. it is the square of the
input graph).
"""

from __future__ import annotations

from .graph import Graph


def _common_neighbor_pairs(g: Graph) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for w in range(g.n):
        nbrs = g.adjacency[w]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                pairs.add((nbrs[i], nbrs[j]))
    return pairs


def common_neighbor_graph(g: Graph) -> Graph:
    """Join u and v whenever they have a common neighbor in g.

    Vertices isolated in the result are kept, so colorings map back to g by
    identity.  For an r-regular input the result has maximum degree at most
    r*(r-1).
    """
    result = Graph(g.n, sorted(_common_neighbor_pairs(g)))
    r = g.regularity()
    if r is not None and result.max_degree() > r * (r - 1):
        raise AssertionError(
            f"common-neighbor graph degree {result.max_degree()} exceeds r(r-1)={r * (r - 1)}"
        )
    return result


def closed_square_graph(g: Graph) -> Graph:
    """The square of g: edges of g plus all common-neighbor pairs.

    For an r-regular input the result has maximum degree at most r*r, and it
    is connected whenever g is.
    """
    pairs = _common_neighbor_pairs(g)
    pairs.update(g.edges())
    result = Graph(g.n, sorted(pairs))
    r = g.regularity()
    if r is not None and result.max_degree() > r * r:
        raise AssertionError(
            f"closed square degree {result.max_degree()} exceeds r^2={r * r}"
        )
    return result
