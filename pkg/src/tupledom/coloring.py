"""Proper vertex coloring: greedy baseline plus a constructive engine that
achieves max-degree many colors on every component that is neither a complete
graph nor an odd cycle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with its color-class inventory.

    Color indices are compact: every class 0..num_colors-1 is nonempty and
    the classes partition the vertex set.
    """

    assignment: tuple[int, ...]
    num_colors: int
    classes: tuple[frozenset[int], ...]

    @classmethod
    def build(cls, g: Graph, assignment: Sequence[int | None]) -> "Coloring":
        if len(assignment) != g.n:
            raise ValueError(
                f"assignment covers {len(assignment)} vertices, graph has {g.n}"
            )
        for v, c in enumerate(assignment):
            if c is None or c < 0:
                raise ValueError(f"vertex {v} has no valid color")
        for u, v in g.edges():
            if assignment[u] == assignment[v]:
                raise ValueError(
                    f"improper coloring: edge ({u},{v}) joins two color-{assignment[u]} vertices"
                )
        used = sorted({c for c in assignment})
        remap = {c: i for i, c in enumerate(used)}
        final = tuple(remap[c] for c in assignment)
        classes = tuple(
            frozenset(v for v in range(g.n) if final[v] == i) for i in range(len(used))
        )
        return cls(assignment=final, num_colors=len(used), classes=classes)


def greedy_coloring(g: Graph, order: Sequence[int]) -> Coloring:
    """Color vertices in the given order, each taking the smallest color
    absent from its already-colored neighbors.  Uses at most max_degree+1
    colors."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    assignment: list[int | None] = [None] * g.n
    for u in order:
        used = {assignment[w] for w in g.adjacency[u] if assignment[w] is not None}
        c = 0
        while c in used:
            c += 1
        assignment[u] = c
    return Coloring.build(g, assignment)


def find_complete_components(g: Graph, size: int) -> list[frozenset[int]]:
    """Connected components that induce a complete graph on exactly `size`
    vertices, ordered by smallest member."""
    if size < 1:
        raise ValueError(f"size must be at least 1, got {size}")
    found = []
    for comp in g.connected_components():
        if len(comp) == size and all(g.degree(v) == size - 1 for v in comp):
            found.append(frozenset(comp))
    return found


def brooks_coloring(g: Graph) -> Coloring:
    """Proper coloring meeting the Brooks bound, constructively.

    Per component: complete graphs on m vertices get m colors and odd cycles
    get 3; every other component gets at most max-degree many colors.  The
    same graph always yields the same coloring (all traversal orders fixed).
    """
    assignment: list[int | None] = [None] * g.n
    for comp in g.connected_components():
        _color_component(g, comp, assignment)
    return Coloring.build(g, assignment)


# -- per-component machinery ----------------------------------------------


def _color_component(g: Graph, comp: list[int], assignment: list[int | None]) -> None:
    m = len(comp)
    comp_set = frozenset(comp)
    degrees = [g.degree(v) for v in comp]
    maxdeg = max(degrees)

    if all(d == m - 1 for d in degrees):
        for i, u in enumerate(comp):
            assignment[u] = i
        return

    if maxdeg <= 2:
        # path or cycle; complete cases (K1, K2, K3) were handled above
        if min(degrees) == 2 and m % 2 == 1:
            _color_odd_cycle(g, comp, assignment)
        else:
            _two_color(g, comp, assignment)
        return

    if min(degrees) < maxdeg:
        # a vertex of small degree can be colored last
        root = next(v for v in comp if g.degree(v) < maxdeg)
        colored = _greedy_reverse_bfs(g, comp_set, root, {})
        for u, c in colored.items():
            assignment[u] = c
        return

    cut = _find_cut_vertex(g, comp_set)
    if cut is not None:
        _color_around_cut_vertex(g, comp_set, cut, assignment)
        return

    _color_two_connected_regular(g, comp, comp_set, assignment)


def _color_odd_cycle(g: Graph, comp: list[int], assignment: list[int | None]) -> None:
    walk = [comp[0]]
    prev = None
    while len(walk) < len(comp):
        cur = walk[-1]
        nxt = next(w for w in g.adjacency[cur] if w != prev)
        prev = cur
        walk.append(nxt)
    for i, u in enumerate(walk):
        assignment[u] = i % 2
    assignment[walk[-1]] = 2


def _two_color(g: Graph, comp: list[int], assignment: list[int | None]) -> None:
    start = comp[0]
    assignment[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if assignment[w] is None:
                assignment[w] = 1 - assignment[u]
                queue.append(w)


def _bfs_order(g: Graph, allowed: frozenset[int], root: int) -> list[int]:
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def _greedy_reverse_bfs(
    g: Graph, allowed: frozenset[int], root: int, pre: dict[int, int]
) -> dict[int, int]:
    """Color `allowed` greedily in reverse BFS order from root.

    Every non-root vertex has its BFS parent still uncolored when its turn
    comes, so it sees at most degree-1 colors; the caller guarantees the
    root also sees fewer than its degree (small degree, or two precolored
    neighbors sharing a color via `pre`).
    """
    order = _bfs_order(g, allowed, root)
    if len(order) != len(allowed):
        raise RuntimeError("greedy coloring requires a connected vertex set")
    colored = dict(pre)
    for u in reversed(order):
        used = {colored[w] for w in g.adjacency[u] if w in colored}
        c = 0
        while c in used:
            c += 1
        colored[u] = c
    return {u: colored[u] for u in allowed}


def _connected_within(g: Graph, allowed: frozenset[int]) -> bool:
    start = min(allowed)
    return len(_bfs_order(g, allowed, start)) == len(allowed)


def _components_within(g: Graph, allowed: frozenset[int]) -> list[frozenset[int]]:
    remaining = set(allowed)
    parts = []
    while remaining:
        part = _bfs_order(g, frozenset(remaining), min(remaining))
        parts.append(frozenset(part))
        remaining.difference_update(part)
    return parts


def _find_cut_vertex(g: Graph, comp_set: frozenset[int]) -> int | None:
    for v in sorted(comp_set):
        rest = comp_set - {v}
        if rest and not _connected_within(g, rest):
            return v
    return None


def _color_around_cut_vertex(
    g: Graph, comp_set: frozenset[int], cut: int, assignment: list[int | None]
) -> None:
    """Split a regular component at a cut vertex; in each piece the cut
    vertex has small degree, so the greedy case applies, and the per-piece
    palettes are permuted to give the cut vertex color 0 everywhere."""
    for part in _components_within(g, comp_set - {cut}):
        allowed = part | {cut}
        local = _greedy_reverse_bfs(g, allowed, cut, {})
        a = local[cut]
        for u, c in local.items():
            if c == a:
                c = 0
            elif c == 0:
                c = a
            assignment[u] = c


def _color_two_connected_regular(
    g: Graph, comp: list[int], comp_set: frozenset[int], assignment: list[int | None]
) -> None:
    """Brooks' hard case: a 2-connected maxdeg-regular component that is
    neither complete nor a cycle.  Some vertex v has two non-adjacent
    neighbors x, y whose joint removal keeps the component connected; give
    x and y the same color and greedily color the rest toward v."""
    for v in comp:
        nbrs = g.adjacency[v]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                x, y = nbrs[i], nbrs[j]
                if g.has_edge(x, y):
                    continue
                allowed = comp_set - {x, y}
                if _connected_within(g, allowed):
                    assignment[x] = 0
                    assignment[y] = 0
                    colored = _greedy_reverse_bfs(g, allowed, v, {x: 0, y: 0})
                    for u, c in colored.items():
                        assignment[u] = c
                    return
    raise RuntimeError(
        "no Brooks triple found; component should have been complete or an odd cycle"
    )
