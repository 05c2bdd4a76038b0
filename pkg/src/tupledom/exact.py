"""Exact minimum k-tuple (total) domination by branch and bound.

Ground truth for small instances: either proves the optimum, reports
infeasibility, or runs out of node budget and says so; a budget exhaustion
never yields a number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

DEFAULT_BUDGET = 50_000_000

STATUS_PROVEN = "proven"
STATUS_INFEASIBLE = "infeasible"
STATUS_BUDGET = "budget-exhausted"


@dataclass(frozen=True)
class ExactResult:
    status: str  # "proven" | "infeasible" | "budget-exhausted"
    size: int | None
    vertices: frozenset[int] | None
    nodes_explored: int


def exact_gamma_total(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Minimum size of a set with k open neighbors at every vertex."""
    return _solve(g, k, budget, closed=False)


def exact_gamma_closed(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Minimum size of a set with k closed neighbors at every vertex."""
    return _solve(g, k, budget, closed=True)


def _solve(g: Graph, k: int, budget: int, closed: bool) -> ExactResult:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if budget < 1:
        raise ValueError(f"budget must be at least 1, got {budget}")
    n = g.n
    # coverage is symmetric: v covers exactly the vertices that cover v
    covers = []
    for v in range(n):
        mask = 0
        for w in g.adjacency[v]:
            mask |= 1 << w
        if closed:
            mask |= 1 << v
        covers.append(mask)
    if any(mask.bit_count() < k for mask in covers):
        return ExactResult(STATUS_INFEASIBLE, None, None, 0)

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    cover_lists = [tuple(g.adjacency[v]) + ((v,) if closed else ()) for v in range(n)]
    max_cover = max(mask.bit_count() for mask in covers)

    demand = [k] * n  # may go negative once overcovered
    avail = [covers[v].bit_count() for v in range(n)]

    best_size = n
    best_set: tuple[int, ...] = tuple(range(n))
    chosen: list[int] = []
    nodes = 0
    exhausted = False

    def walk(idx: int, residual: int) -> None:
        nonlocal best_size, best_set, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        if residual == 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = tuple(chosen)
            return
        if idx == n:
            return
        need = (residual + max_cover - 1) // max_cover
        if len(chosen) + need >= best_size:
            return
        v = order[idx]
        # v is decided either way, so it stops being an undecided coverer
        for u in cover_lists[v]:
            avail[u] -= 1

        # branch 1: take v (demand and avail drop together, never deadly)
        delta = 0
        for u in cover_lists[v]:
            if demand[u] > 0:
                delta += 1
            demand[u] -= 1
        chosen.append(v)
        walk(idx + 1, residual - delta)
        chosen.pop()
        for u in cover_lists[v]:
            demand[u] += 1

        # branch 2: leave v out, unless some covered vertex now cannot reach k
        if all(avail[u] >= demand[u] for u in cover_lists[v]):
            walk(idx + 1, residual)

        for u in cover_lists[v]:
            avail[u] += 1

    walk(0, k * n)
    if exhausted:
        return ExactResult(STATUS_BUDGET, None, None, nodes)
    return ExactResult(STATUS_PROVEN, best_size, frozenset(best_set), nodes)
