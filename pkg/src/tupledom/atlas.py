"""Named graphs and small standard families.

Includes the incidence graphs of the Desarguesian projective planes of small
order and the three known Moore graphs of diameter two, which are the
extremal cases of the domination routines.
"""

from __future__ import annotations

import itertools

from .graph import Graph

SUPPORTED_PLANE_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# irreducible polynomials, coefficients constant-term first
_PRIME_POWER = {
    4: (2, 2, (1, 1, 1)),  # x^2 + x + 1 over GF(2)
    8: (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1 over GF(2)
    9: (3, 2, (1, 0, 1)),  # x^2 + 1 over GF(3)
}


def _field_tables(q: int) -> tuple[list[list[int]], list[list[int]]]:
    """Full addition and multiplication tables for GF(q), elements 0..q-1.

    Prime q uses modular arithmetic; prime powers encode polynomials over
    GF(p) as base-p digit strings.
    """
    if q in (2, 3, 5, 7):
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        return add, mul
    p, e, poly = _PRIME_POWER[q]

    def digits(x: int) -> list[int]:
        return [(x // p**i) % p for i in range(e)]

    def pack(ds: list[int]) -> int:
        return sum(d * p**i for i, d in enumerate(ds))

    def poly_mul(a: int, b: int) -> int:
        da, db = digits(a), digits(b)
        prod = [0] * (2 * e - 1)
        for i, ca in enumerate(da):
            for j, cb in enumerate(db):
                prod[i + j] = (prod[i + j] + ca * cb) % p
        # reduce modulo the monic irreducible polynomial
        for d in range(2 * e - 2, e - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(e):
                    prod[d - e + i] = (prod[d - e + i] - c * poly[i]) % p
        return pack(prod[:e])

    add = [
        [pack([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(q)]
        for a in range(q)
    ]
    mul = [[poly_mul(a, b) for b in range(q)] for a in range(q)]
    return add, mul


def projective_plane_incidence(q: int) -> Graph:
    """Point-line incidence graph of PG(2,q): bipartite, (q+1)-regular, on
    2(q^2+q+1) vertices, points numbered before lines."""
    if q == 6:
        raise ValueError("no projective plane of order 6 exists")
    if q not in SUPPORTED_PLANE_ORDERS:
        raise ValueError(
            f"unsupported plane order {q}; supported orders are {list(SUPPORTED_PLANE_ORDERS)}"
        )
    add, mul = _field_tables(q)
    # projective triples, first nonzero coordinate normalized to 1
    triples = [
        (a, b, c)
        for a in range(q)
        for b in range(q)
        for c in range(q)
        if (a, b, c) != (0, 0, 0)
        and ((a == 1) or (a == 0 and b == 1) or (a == 0 and b == 0 and c == 1))
    ]
    count = q * q + q + 1
    if len(triples) != count:
        raise RuntimeError(f"expected {count} projective triples, built {len(triples)}")
    edges = []
    for i, point in enumerate(triples):
        for j, line in enumerate(triples):
            s = 0
            for x, y in zip(point, line):
                s = add[s][mul[x][y]]
            if s == 0:
                edges.append((i, count + j))
    return Graph(2 * count, edges)


def heawood() -> Graph:
    """The Heawood graph: LCF notation [5,-5]^7 on a 14-cycle."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, [tuple(sorted(e)) for e in edges])


def moore_order(r: int, d: int) -> int:
    """Largest possible order of an r-regular graph of diameter d."""
    if r < 2:
        raise ValueError(f"degree must be at least 2, got {r}")
    if d < 1:
        raise ValueError(f"diameter must be at least 1, got {d}")
    return 1 + r * sum((r - 1) ** i for i in range(d))


def moore_graph(r: int) -> Graph:
    """The unique r-regular diameter-2 graph on r^2+1 vertices, r in {2,3,7}.

    The r=57 case is open, so it gets its own error.  Each construction is
    checked against the defining invariants before being returned.
    """
    if r == 57:
        raise ValueError(
            "existence unknown: no 57-regular diameter-2 graph on 3250 vertices is known"
        )
    if r == 2:
        g = cycle(5)
    elif r == 3:
        g = _petersen()
    elif r == 7:
        g = _hoffman_singleton()
    else:
        raise ValueError(f"no Moore graph of degree {r}; supported degrees are 2, 3, 7")
    if g.regularity() != r or g.n != moore_order(r, 2) or g.diameter() != 2:
        raise RuntimeError(f"Moore graph construction for degree {r} failed validation")
    return g


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, [tuple(sorted(e)) for e in edges])


def _hoffman_singleton() -> Graph:
    """Five pentagons P_0..P_4 and five pentagrams Q_0..Q_4, with pentagon h
    vertex j joined to pentagram k vertex h*k+j mod 5."""
    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add(tuple(sorted((5 * h + j, 5 * h + (j + 1) % 5))))
    for k in range(5):
        for j in range(5):
            edges.add(tuple(sorted((25 + 5 * k + j, 25 + 5 * k + (j + 2) % 5))))
    for h in range(5):
        for k in range(5):
            for j in range(5):
                edges.add((5 * h + j, 25 + 5 * k + (h * k + j) % 5))
    return Graph(50, sorted(edges))


# -- small standard families ----------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"both parts need at least 1 vertex, got {a} and {b}")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise ValueError(f"hypercube needs dimension at least 1, got {d}")
    n = 1 << d
    edges = [
        (u, u ^ (1 << bit)) for u in range(n) for bit in range(d) if u < u ^ (1 << bit)
    ]
    return Graph(n, edges)


def prism(n: int) -> Graph:
    """Two n-cycles joined by a perfect matching; 3-regular on 2n vertices."""
    if n < 3:
        raise ValueError(f"prism needs cycles of length at least 3, got {n}")
    edges = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
    edges += [tuple(sorted((n + i, n + (i + 1) % n))) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, sorted(set(edges)))
