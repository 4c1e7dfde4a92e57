"""Ground truth used by tests and audits.

Nothing here reuses the maintainer's bookkeeping: degrees are recounted
from the multiset, and matching numbers come from Hopcroft-Karp or from
plain exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .fractional import Scope
from .snapshot import Snapshot, pair

EXHAUSTIVE_LIMIT = 20


@dataclass
class EdcsReport:
    scope: Scope
    overfull: list[tuple[int, int]] = field(default_factory=list)
    underfull: list[tuple[int, int]] = field(default_factory=list)
    inconsistent: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.overfull or self.underfull or self.inconsistent)


def validate_edcs(snap: Snapshot, scope: Scope = "all") -> EdcsReport:
    """Certify both degree conditions of a weighted EDCS.

    The upper condition is checked on every H-edge.  The lower condition is
    checked on every live edge (``scope="all"``) or on H-edges plus edges
    with two clean endpoints (``scope="clean"``).
    """
    beta = snap.beta
    report = EdcsReport(scope)
    deg = snap.recount_degrees()
    if snap.deg_h is not None and list(snap.deg_h) != deg:
        bad = next(v for v in range(snap.n) if snap.deg_h[v] != deg[v])
        report.inconsistent.append(
            f"reported H-degree of {bad} is {snap.deg_h[bad]}, recount gives {deg[bad]}"
        )
    live = set(snap.edges)
    for e, k in snap.h.items():
        if k < 1:
            report.inconsistent.append(f"H-edge {e} has multiplicity {k}")
        if e not in live:
            report.inconsistent.append(f"H-edge {e} is not a live edge")
        u, v = e
        if deg[u] + deg[v] > beta:
            report.overfull.append(e)
    dirty = snap.dirty
    for u, v in snap.edges:
        if scope == "clean" and (u in dirty or v in dirty) and (u, v) not in snap.h:
            continue
        if deg[u] + deg[v] < beta - 1:
            report.underfull.append((u, v))
    return report


def exhaustive_mu(n: int, edges) -> int:
    """Matching number of a general graph on at most 20 vertices, by search."""
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search is limited to {EXHAUSTIVE_LIMIT} vertices, got {n}")
    nbr_mask = [0] * n
    for u, v in edges:
        if u == v:
            continue
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        # Lowest available vertex is either left unmatched or matched to a neighbour.
        while avail and not nbr_mask[(avail & -avail).bit_length() - 1] & avail:
            avail &= avail - 1
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        top = best(rest)
        if 1 + (bin(rest).count("1") - 1) // 2 > top:
            cands = nbr_mask[v] & rest
            while cands:
                w_bit = cands & -cands
                cands ^= w_bit
                top = max(top, 1 + best(rest & ~w_bit))
        return top

    return best((1 << n) - 1)


@dataclass
class BudgetReport:
    mode: Literal["incremental", "with-deletions"]
    h_updates: int
    update_bound: Fraction
    dirty: int
    dirty_bound: Fraction
    max_edge_scans: int
    scan_bound: int
    fix_vertex_calls: int

    @property
    def updates_ok(self) -> bool:
        return self.h_updates <= self.update_bound

    @property
    def dirty_ok(self) -> bool:
        return self.dirty <= self.dirty_bound

    @property
    def scans_ok(self) -> bool:
        return self.max_edge_scans <= self.scan_bound

    @property
    def calls_ok(self) -> bool:
        return self.fix_vertex_calls <= 2 * self.h_updates

    @property
    def passed(self) -> bool:
        return self.updates_ok and self.dirty_ok and self.scans_ok and self.calls_ok

    @property
    def slack(self) -> Fraction:
        return self.update_bound - self.h_updates


def audit_budgets(
    maintainer,
    oracle_mu: int | None,
    mode: Literal["incremental", "with-deletions"] = "incremental",
    *,
    general: bool = False,
) -> BudgetReport:
    """Compare lifetime counters with the update and dirty-set budgets.

    Insertion-only runs are charged ``beta^2 * mu`` updates (``3/2 * mu``
    stands in for the fractional optimum on general graphs); runs with
    deletions are charged ``3 beta^2 n``.  Each dirty vertex used up
    ``visit_cap`` activations and every activation stems from an H-update,
    which bounds the dirty count by ``2 * budget / visit_cap``.
    """
    beta = maintainer.beta
    c = maintainer.counters()
    if mode == "incremental":
        if oracle_mu is None:
            raise ValueError("insertion-only audits need the exact matching number")
        mu_star = Fraction(3, 2) * oracle_mu if general else Fraction(oracle_mu)
        bound = beta * beta * mu_star
    else:
        bound = Fraction(3 * beta * beta * maintainer.n)
    cap = maintainer.visit_cap
    return BudgetReport(
        mode=mode,
        h_updates=c.h_updates,
        update_bound=bound,
        dirty=maintainer.dirty_count(),
        dirty_bound=2 * bound / cap,
        max_edge_scans=maintainer.max_edge_scans(),
        scan_bound=2 * cap,
        fix_vertex_calls=c.fix_vertex_calls,
    )


def brute_force_matchings(n: int, edges) -> int:
    """Largest matching by enumerating edge subsets; only for tiny inputs."""
    edges = sorted({pair(u, v) for u, v in edges})
    best = 0
    m = len(edges)
    if m > 22:
        raise ValueError("too many edges for subset enumeration")
    for mask in range(1 << m):
        used = 0
        ok = True
        k = 0
        for i in range(m):
            if mask >> i & 1:
                u, v = edges[i]
                bits = (1 << u) | (1 << v)
                if used & bits:
                    ok = False
                    break
                used |= bits
                k += 1
        if ok and k > best:
            best = k
    return best
