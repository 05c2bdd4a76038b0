"""Classical logarithmic domination bounds, evaluated for comparison with
the constructive fractions the coloring approach guarantees.

Values are reported unfloored (real bounds on integer quantities);
values exceeding n are still reported, flagged vacuous in the notes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph


def closed_degree_binomial_mean(g: Graph, m: int) -> float:
    """Average over vertices of C(d(v)+1, m)."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return sum(math.comb(g.degree(v) + 1, m) for v in range(g.n)) / g.n


def degree_binomial_mean(g: Graph, m: int) -> float:
    """Average over vertices of C(d(v), m)."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return sum(math.comb(g.degree(v), m) for v in range(g.n)) / g.n


def log_bound_closed(g: Graph, k: int) -> float | None:
    """Classical bound on the minimum k-tuple dominating set size:
    (ln(delta-k+2) + ln(mean C(d+1,k-1)) + 1) / (delta-k+2) * n,
    applicable for 1 <= k <= delta+1; None otherwise."""
    delta = g.min_degree()
    if not 1 <= k <= delta + 1:
        return None
    gap = delta - k + 2
    return (math.log(gap) + math.log(closed_degree_binomial_mean(g, k - 1)) + 1) / gap * g.n


def log_bound_total(g: Graph, k: int) -> float | None:
    """Classical bound on the minimum k-tuple total dominating set size:
    (ln(delta-k) + ln(mean C(d,k)) + 1) / (delta-k) * n,
    applicable for delta > k >= 1; None otherwise."""
    delta = g.min_degree()
    if not 1 <= k < delta:
        return None
    gap = delta - k
    return (math.log(gap) + math.log(degree_binomial_mean(g, k)) + 1) / gap * g.n


def constructive_bounds(r: int, n: int) -> tuple[float | None, float | None]:
    """The guaranteed fractions for connected r-regular graphs on n
    vertices: ((r(r-1)-1)/(r(r-1)) * n, (r^2-1)/r^2 * n); a slot is None
    below its degree threshold (3 for total, 2 for closed)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if r < 0:
        raise ValueError(f"degree must be nonnegative, got {r}")
    total = (r * (r - 1) - 1) / (r * (r - 1)) * n if r >= 3 else None
    closed = (r * r - 1) / (r * r) * n if r >= 2 else None
    return total, closed


@dataclass(frozen=True)
class BoundReport:
    """Side-by-side bound values for one graph.

    The total slot evaluates the (r-1)-tuple total problem, the closed
    slot the r-tuple problem (minimum degree standing in for r on
    irregular graphs).  None means inapplicable; `notes` maps each absent
    or vacuous slot to the reason.
    """

    n: int
    r: int | None
    k_total: int
    k_closed: int
    degree_binomial_mean: float
    closed_degree_binomial_mean: float
    log_total: float | None
    log_closed: float | None
    constructive_total: float | None
    constructive_closed: float | None
    notes: dict[str, str] = field(default_factory=dict)


def compare_report(g: Graph) -> BoundReport:
    """Evaluate all four bounds on a connected graph.

    Regular graphs get the constructive fractions alongside the classical
    values; irregular graphs get only the classical values.
    """
    if not g.is_connected():
        raise ValueError("graph is not connected")
    r = g.regularity()
    delta = g.min_degree()
    k_total = delta - 1
    k_closed = delta
    notes: dict[str, str] = {}

    log_total = log_bound_total(g, k_total) if k_total >= 1 else None
    if log_total is None:
        notes["log_total"] = (
            f"inapplicable: needs min_degree > k >= 1, got k={k_total}"
        )
    elif log_total > g.n:
        notes["log_total"] = f"vacuous: {log_total:.2f} exceeds n={g.n}"

    log_closed = log_bound_closed(g, k_closed)
    if log_closed is None:
        notes["log_closed"] = (
            f"inapplicable: needs 1 <= k <= min_degree+1, got k={k_closed}"
        )
    elif log_closed > g.n:
        notes["log_closed"] = f"vacuous: {log_closed:.2f} exceeds n={g.n}"

    if r is None:
        constructive_total = constructive_closed = None
        notes["constructive_total"] = "inapplicable: graph is not regular"
        notes["constructive_closed"] = "inapplicable: graph is not regular"
    else:
        constructive_total, constructive_closed = constructive_bounds(r, g.n)
        if constructive_total is None:
            notes["constructive_total"] = (
                f"inapplicable: needs degree at least 3, got {r}"
            )
        if constructive_closed is None:
            notes["constructive_closed"] = (
                f"inapplicable: needs degree at least 2, got {r}"
            )

    return BoundReport(
        n=g.n,
        r=r,
        k_total=k_total,
        k_closed=k_closed,
        degree_binomial_mean=degree_binomial_mean(g, max(k_total, 0)),
        closed_degree_binomial_mean=closed_degree_binomial_mean(
            g, max(k_closed - 1, 0)
        ),
        log_total=log_total,
        log_closed=log_closed,
        constructive_total=constructive_total,
        constructive_closed=constructive_closed,
        notes=notes,
    )
