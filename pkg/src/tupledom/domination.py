"""Constructive k-tuple domination for regular graphs.

For a connected r-regular graph, colorings of the two auxiliary graphs give
an (r-1)-tuple total dominating set of at most (r(r-1)-1)/(r(r-1)) * n
vertices and an r-tuple dominating set of at most (r^2-1)/r^2 * n vertices.
The extremal cases, projective-plane incidence graphs and Moore graphs of
diameter two, are detected structurally and handled exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .auxgraphs import closed_square_graph, common_neighbor_graph
from .coloring import Coloring, brooks_coloring, find_complete_components
from .graph import Graph

BRANCH_GENERIC = "generic-coloring"
BRANCH_PLANE = "projective-plane-exact"
BRANCH_MOORE = "moore-exact"


@dataclass(frozen=True)
class DominationCertificate:
    """A dominating set together with how it was obtained.

    `colors_used` is the palette size of the auxiliary coloring on the
    generic branch and 0 on the exact branches.  The fraction
    bound_numerator/bound_denominator of n is the guaranteed size bound.
    """

    vertices: frozenset[int]
    variant: str  # "total" | "closed"
    k: int
    branch: str
    colors_used: int
    bound_numerator: int
    bound_denominator: int

    @property
    def size(self) -> int:
        return len(self.vertices)


def _checked_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    members = frozenset(s)
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return members


def verify_total(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff every vertex has at least k open neighbors in s."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    members = _checked_set(g, s)
    return all(len(g.neighbor_set(v) & members) >= k for v in range(g.n))


def verify_closed(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff every vertex has at least k closed neighbors (itself
    counting when in s) in s."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    members = _checked_set(g, s)
    return all(len(g.closed_neighbor_set(v) & members) >= k for v in range(g.n))


def set_from_coloring(g: Graph, col: Coloring) -> frozenset[int]:
    """All vertices outside the largest color class; among equally large
    classes the one with the lowest color index is dropped."""
    if len(col.assignment) != g.n:
        raise ValueError(
            f"coloring covers {len(col.assignment)} vertices, graph has {g.n}"
        )
    drop = max(range(col.num_colors), key=lambda i: (len(col.classes[i]), -i))
    return frozenset(range(g.n)) - col.classes[drop]


def _require_connected_regular(g: Graph, min_degree: int) -> int:
    r = g.regularity()
    if r is None:
        raise ValueError("graph is not regular")
    if r < min_degree:
        raise ValueError(f"degree must be at least {min_degree}, got {r}")
    if not g.is_connected():
        raise ValueError("graph is not connected")
    return r


def total_dominating_r_minus_1(g: Graph) -> DominationCertificate:
    """An (r-1)-tuple total dominating set for a connected r-regular graph.

    Incidence graphs of projective planes of order r-1 are recognized by
    their common-neighbor graph splitting into two complete components of
    order r(r-1)+1; there the optimum 2r(r-1) is achieved by dropping one
    vertex from each side.  Everything else is colored.
    """
    r = _require_connected_regular(g, 3)
    k = r - 1
    aux = common_neighbor_graph(g)
    part_order = r * (r - 1) + 1
    plane_parts = find_complete_components(aux, part_order)
    if len(plane_parts) == 2 and 2 * part_order == g.n:
        sides = g.bipartition()
        if sides is None:
            raise RuntimeError(
                "common-neighbor graph has the projective-plane signature "
                "but the graph is not bipartite"
            )
        chosen = frozenset(range(g.n)) - {min(sides[0]), min(sides[1])}
        cert = DominationCertificate(
            vertices=chosen,
            variant="total",
            k=k,
            branch=BRANCH_PLANE,
            colors_used=0,
            bound_numerator=r * (r - 1),
            bound_denominator=r * (r - 1) + 1,
        )
    else:
        col = brooks_coloring(aux)
        if col.num_colors > r * (r - 1):
            raise RuntimeError(
                f"common-neighbor coloring used {col.num_colors} colors, "
                f"limit is {r * (r - 1)}"
            )
        cert = DominationCertificate(
            vertices=set_from_coloring(g, col),
            variant="total",
            k=k,
            branch=BRANCH_GENERIC,
            colors_used=col.num_colors,
            bound_numerator=r * (r - 1) - 1,
            bound_denominator=r * (r - 1),
        )
    if not verify_total(g, cert.vertices, k):
        raise RuntimeError(f"constructed set is not {k}-tuple total dominating")
    return cert


def dominating_r(g: Graph) -> DominationCertificate:
    """An r-tuple dominating set for a connected r-regular graph.

    Moore graphs of diameter two are recognized by their closed square
    being complete on r^2+1 vertices; there any n-1 vertices are optimal.
    Everything else is colored.
    """
    r = _require_connected_regular(g, 2)
    k = r
    aux = closed_square_graph(g)
    if aux.is_complete() and g.n == r * r + 1:
        cert = DominationCertificate(
            vertices=frozenset(range(g.n - 1)),
            variant="closed",
            k=k,
            branch=BRANCH_MOORE,
            colors_used=0,
            bound_numerator=r * r,
            bound_denominator=r * r + 1,
        )
    else:
        col = brooks_coloring(aux)
        if col.num_colors > r * r:
            raise RuntimeError(
                f"closed-square coloring used {col.num_colors} colors, "
                f"limit is {r * r}"
            )
        cert = DominationCertificate(
            vertices=set_from_coloring(g, col),
            variant="closed",
            k=k,
            branch=BRANCH_GENERIC,
            colors_used=col.num_colors,
            bound_numerator=r * r - 1,
            bound_denominator=r * r,
        )
    if not verify_closed(g, cert.vertices, k):
        raise RuntimeError(f"constructed set is not {k}-tuple dominating")
    return cert
