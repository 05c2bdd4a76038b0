"""Random connected regular graphs via the configuration model with full
rejection, so draws are uniform over simple connected r-regular graphs."""

from __future__ import annotations

import random

from .graph import Graph

# recorded in metadata so corpora can be rebuilt elsewhere: stub pairing
# driven by Python's Mersenne Twister shuffle
GENERATOR_ID = "configuration-pairing/mt19937/v1"

RETRY_CAP = 10_000


def random_regular(n: int, r: int, seed: int) -> Graph:
    """A uniformly sampled simple connected r-regular graph on n vertices.

    Pairs up degree stubs after a seeded shuffle and rejects the whole
    attempt on any loop, repeated edge, or disconnected result.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    if r >= n:
        raise ValueError(f"degree {r} impossible on {n} vertices")
    if (n * r) % 2 != 0:
        raise ValueError(f"no {r}-regular graph on {n} vertices: n*r must be even")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(r)]
    for _ in range(RETRY_CAP):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if not ok:
            continue
        g = Graph(n, sorted(edges))
        if g.is_connected():
            return g
    raise RuntimeError(
        f"no simple connected {r}-regular graph on {n} vertices found "
        f"in {RETRY_CAP} attempts"
    )
