"""Graph interchange: graph6 lines and DIMACS edge lists.

graph6 is the corpus format (one graph per line, dense-friendly); DIMACS is
accepted for interoperability with coloring/domination tooling.
"""

from __future__ import annotations

from .graph import Graph

_G6_PREFIX = ">>graph6<<"


def _g6_header(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding: upper-triangle bits in the order
    (0,1),(0,2),(1,2),(0,3),... packed into 6-bit printable characters."""
    out = [_g6_header(g.n)]
    buf = 0
    filled = 0
    for v in range(1, g.n):
        nbrs = g.neighbor_set(v)
        for u in range(v):
            buf = (buf << 1) | (u in nbrs)
            filled += 1
            if filled == 6:
                out.append(chr(63 + buf))
                buf = 0
                filled = 0
    if filled:
        out.append(chr(63 + (buf << (6 - filled))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; errors carry the byte offset into `text`."""
    line = text.strip()
    base = 0
    if line.startswith(_G6_PREFIX):
        base = len(_G6_PREFIX)
        line = line[len(_G6_PREFIX) :]
    if not line:
        raise ValueError("empty graph6 input")
    for i, ch in enumerate(line):
        code = ord(ch)
        if code < 63 or code > 126:
            raise ValueError(f"invalid graph6 byte {ch!r} at offset {base + i}")

    def take(k: int, at: int) -> int:
        if at + k > len(line):
            raise ValueError(f"truncated graph6 header at offset {base + len(line)}")
        value = 0
        for ch in line[at : at + k]:
            value = (value << 6) | (ord(ch) - 63)
        return value

    if line[0] != "~":
        n, body_at = ord(line[0]) - 63, 1
    elif len(line) >= 2 and line[1] != "~":
        n, body_at = take(3, 1), 4
    else:
        n, body_at = take(6, 2), 8
    if n < 1:
        raise ValueError(f"graph6 order {n} out of range at offset {base}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[body_at:]
    if len(body) != nbytes:
        raise ValueError(
            f"graph6 body for n={n} needs {nbytes} bytes, found {len(body)} "
            f"at offset {base + body_at}"
        )
    edges = []
    u, v = 0, 1
    for i, ch in enumerate(body):
        bits = ord(ch) - 63
        for s in range(5, -1, -1):
            if v >= n:
                if (bits >> s) & 1:
                    raise ValueError(
                        f"nonzero trailing bits at offset {base + body_at + i}"
                    )
                continue
            if (bits >> s) & 1:
                edges.append((u, v))
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS edge-format graph; errors carry 1-based line numbers."""
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise ValueError(
                    f"line {lineno}: malformed problem line {line!r}"
                ) from None
            if n < 1 or declared < 0:
                raise ValueError(f"line {lineno}: bad sizes in problem line {line!r}")
        elif fields[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            try:
                a, b = int(fields[1]), int(fields[2])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}") from None
            if not (1 <= a <= n) or not (1 <= b <= n):
                raise ValueError(f"line {lineno}: vertex out of range for n={n}")
            if a == b:
                raise ValueError(f"line {lineno}: loop at vertex {a}")
            e = (min(a, b) - 1, max(a, b) - 1)
            if e in seen:
                raise ValueError(f"line {lineno}: duplicate edge ({a},{b})")
            seen.add(e)
            edges.append(e)
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    if len(edges) != declared:
        raise ValueError(
            f"edge count mismatch: problem line declares {declared}, found {len(edges)}"
        )
    return Graph(n, edges)
