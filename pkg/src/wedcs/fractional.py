"""The explicit fractional matching on ``H`` and its companion vertex cover.

Every H-edge ``(u, v)`` carries weight ``1 / max(deg(u), deg(v))`` per copy.
Because all denominators are H-degrees, the running total is kept as an
integer count per denominator (:class:`DenominatorTally`), which is exact
and cheap to update.

The cover value of a vertex depends only on its H-degree.  The checker
scales it by ``4 * beta`` so that it becomes an integer, and every
comparison against an irrational constant such as ``1 - 4 / sqrt(beta)`` is
rewritten as a comparison of squares.  No tolerances are involved.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .snapshot import Snapshot

Scope = Literal["all", "clean"]


class DenominatorTally:
    """Multiset of unit fractions ``1/d`` stored as counts per ``d``."""

    __slots__ = ("counts",)

    def __init__(self, max_denominator: int):
        self.counts = [0] * (max_denominator + 1)

    def shift(self, old: int, new: int, k: int) -> None:
        """Move ``k`` copies from denominator ``old`` to ``new`` (0 means none)."""
        if old:
            self.counts[old] -= k
        if new:
            self.counts[new] += k

    def value(self) -> Fraction:
        total = Fraction(0)
        for d, c in enumerate(self.counts):
            if c:
                total += Fraction(c, d)
        return total

    def approx(self) -> float:
        return sum(c / d for d, c in enumerate(self.counts) if c)


def edge_weight(du: int, dv: int) -> Fraction:
    """Weight of one copy of an H-edge with endpoint degrees ``du``, ``dv``."""
    return Fraction(1, max(du, dv))


@dataclass(frozen=True)
class CoverValue:
    r: Fraction
    x: Fraction


def vertex_cover_value(deg: int, beta: int) -> CoverValue:
    r = deg - Fraction(beta - 1, 2)
    bump = r * r / beta
    if r >= 0:
        x = min(Fraction(1), Fraction(1, 2) + bump)
    else:
        x = max(Fraction(0), Fraction(1, 2) - bump)
    return CoverValue(r, x)


def scaled_cover(deg: int, beta: int) -> int:
    """``4 * beta * x`` for a vertex of H-degree ``deg``; always an integer."""
    s = 2 * deg - beta + 1
    if s >= 0:
        return min(4 * beta, 2 * beta + s * s)
    return max(0, 2 * beta - s * s)


def vertex_loads(snap: Snapshot, deg: list[int] | None = None) -> list[Fraction]:
    """Total fractional-matching weight at every vertex."""
    deg = snap.degrees() if deg is None else deg
    per_denom: list[dict[int, int]] = [defaultdict(int) for _ in range(snap.n)]
    for (u, v), k in snap.h.items():
        d = max(deg[u], deg[v])
        per_denom[u][d] += k
        per_denom[v][d] += k
    return [sum((Fraction(c, d) for d, c in pd.items()), Fraction(0)) for pd in per_denom]


def fractional_size(snap: Snapshot) -> Fraction:
    """Size of the explicit fractional matching, recomputed from scratch."""
    deg = snap.recount_degrees()
    by_denom: dict[int, int] = defaultdict(int)
    for (u, v), k in snap.h.items():
        by_denom[max(deg[u], deg[v])] += k
    return sum((Fraction(c, d) for d, c in by_denom.items()), Fraction(0))


def _at_most_sqrt(t, c: int, beta: int) -> bool:
    """``t <= c / sqrt(beta)`` for rational ``t`` and ``c >= 0``."""
    return t <= 0 or t * t * beta <= c * c


@dataclass
class SlacknessReport:
    scope: Scope
    f_size: Fraction
    x_size: Fraction
    overloaded: list[int] = field(default_factory=list)
    uncovered: list[tuple[int, int]] = field(default_factory=list)
    loose_edges: list[tuple[int, int]] = field(default_factory=list)
    underloaded: list[int] = field(default_factory=list)
    ratio_ok: bool = True

    @property
    def passed(self) -> bool:
        return not (
            self.overloaded or self.uncovered or self.loose_edges or self.underloaded
        ) and self.ratio_ok

    def failures(self) -> list[str]:
        out = []
        if self.overloaded:
            out.append(f"fractional matching overloads vertex {self.overloaded[0]}")
        if self.uncovered:
            out.append(f"cover misses edge {self.uncovered[0]}")
        if self.loose_edges:
            out.append(f"H-edge {self.loose_edges[0]} has x_u + x_v above 1 + 2/sqrt(b) + 1/b")
        if self.underloaded:
            out.append(f"vertex {self.underloaded[0]} has x > 0 but load below 1 - 4/sqrt(b)")
        if not self.ratio_ok:
            out.append(f"|f| = {self.f_size} below (1 - 6/sqrt(b)) * |x| = {self.x_size}")
        return out


def verify_feasibility_and_slackness(snap: Snapshot, scope: Scope = "all") -> SlacknessReport:
    """Check primal/dual feasibility and approximate complementary slackness.

    With ``scope="clean"`` the cover is only required on H-edges and on
    edges whose endpoints are both clean.
    """
    beta = snap.beta
    deg = snap.recount_degrees()
    alive = snap.alive
    cover_by_deg: dict[int, int] = {}

    def X(v: int) -> int:
        d = deg[v]
        c = cover_by_deg.get(d)
        if c is None:
            c = cover_by_deg[d] = scaled_cover(d, beta)
        return c

    loads = vertex_loads(snap, deg)
    full = 4 * beta
    report = SlacknessReport(scope, Fraction(0), Fraction(0))

    for v in range(snap.n):
        if alive[v] and loads[v] > 1:
            report.overloaded.append(v)

    dirty = snap.dirty
    for u, v in snap.edges:
        if scope == "clean" and (u in dirty or v in dirty) and (u, v) not in snap.h:
            continue
        if X(u) + X(v) < full:
            report.uncovered.append((u, v))

    for u, v in snap.h:
        # (X_u + X_v) / 4b <= 1 + 2/sqrt(b) + 1/b, scaled down by b
        if not _at_most_sqrt(Fraction(X(u) + X(v) - full - 4, beta), 8, beta):
            report.loose_edges.append((u, v))

    x_total = 0
    for v in range(snap.n):
        if not alive[v]:
            continue
        xv = X(v)
        x_total += xv
        if xv > 0 and not _at_most_sqrt(1 - loads[v], 4, beta):
            report.underloaded.append(v)

    report.f_size = sum(loads, Fraction(0)) / 2
    report.x_size = Fraction(x_total, full) if full else Fraction(0)
    gap = report.x_size - report.f_size
    report.ratio_ok = gap <= 0 or gap * gap * beta <= 36 * report.x_size**2
    return report
