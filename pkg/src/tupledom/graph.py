"""Immutable simple undirected graphs and the structural queries used everywhere else."""

from __future__ import annotations

from collections import deque
from math import inf
from typing import Iterable, Iterator


class Graph:
    """Simple undirected graph on the dense vertex set 0..n-1.

    Neighbor lists are kept sorted so that intersections are cheap and all
    traversals are deterministic.  The constructor insists on a clean edge
    list: loops and duplicate edges are rejected rather than silently
    merged, so generator bugs surface immediately.  Instances are immutable
    after construction and safe to share between concurrent workers.
    """

    __slots__ = ("n", "adjacency", "edge_count", "_neighbor_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj
        )
        self.edge_count = len(seen)
        self._neighbor_sets = tuple(frozenset(nbrs) for nbrs in self.adjacency)

    # -- basic queries -----------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._neighbor_sets[v]

    def closed_neighbor_set(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._neighbor_sets[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def min_degree(self) -> int:
        return min(len(nbrs) for nbrs in self.adjacency)

    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self.adjacency)

    def regularity(self) -> int | None:
        """Return r when every vertex has degree r, otherwise None."""
        degrees = {len(nbrs) for nbrs in self.adjacency}
        if len(degrees) == 1:
            return next(iter(degrees))
        return None

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        """N(u) intersected with N(v); u and v must be distinct."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"common_neighbors needs two distinct vertices, got {u} twice")
        return self._neighbor_sets[u] & self._neighbor_sets[v]

    # -- traversals --------------------------------------------------------

    def bfs_distances(self, source: int) -> list[int]:
        """Distances from source; unreachable vertices get -1."""
        self._check_vertex(source)
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        return -1 not in self.bfs_distances(0)

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by their smallest vertex."""
        comp = [-1] * self.n
        components: list[list[int]] = []
        for start in range(self.n):
            if comp[start] != -1:
                continue
            comp[start] = len(components)
            members = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if comp[w] == -1:
                        comp[w] = comp[start]
                        members.append(w)
                        queue.append(w)
            components.append(sorted(members))
        return components

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Two-color split when the graph has no odd cycle, else None.

        Each component is colored by BFS from its smallest vertex, which
        gets side 0; for a connected graph the split is unique up to swap.
        """
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] != -1:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if side[w] == -1:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        part0 = frozenset(v for v in range(self.n) if side[v] == 0)
        part1 = frozenset(v for v in range(self.n) if side[v] == 1)
        return (part0, part1)

    def diameter(self) -> int | float:
        """Largest shortest-path distance; math.inf when disconnected."""
        best = 0
        for source in range(self.n):
            dist = self.bfs_distances(source)
            if -1 in dist:
                return inf
            best = max(best, max(dist))
        return best

    def girth(self) -> int | float:
        """Length of a shortest cycle; math.inf when acyclic.

        BFS from every root; each non-tree edge (u, w) seen from root gives
        a closed walk of length dist[u] + dist[w] + 1 through the root, an
        upper bound on the girth that is attained for some root.
        """
        best: int | float = inf
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                # any cycle closed at u or below has length >= 2*dist[u]
                if 2 * dist[u] >= best:
                    continue
                for w in self.adjacency[u]:
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"
