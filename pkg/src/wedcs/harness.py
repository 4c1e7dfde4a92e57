"""Drive a stream through the matcher and produce checkpoint records."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterator, Literal

from .fractional import verify_feasibility_and_slackness
from .graph import GraphError
from .hk import BipartiteView, hk_exact
from .maintainer import WedcsParams
from .oracles import EXHAUSTIVE_LIMIT, audit_budgets, exhaustive_mu, validate_edcs
from .pipeline import Backend, DynamicMatcher
from .streams import Event, Header

log = logging.getLogger(__name__)

ORACLE_EDGE_LIMIT = 100_000


class InputError(ValueError):
    """An event the run cannot accept (exit status 2)."""


@dataclass
class RunConfig:
    epsilon: float | str | Fraction = "0.5"
    beta: int | None = None
    visit_cap: int | None = None
    mode: Literal["frac", "int"] | None = None
    deletions: bool = False
    oracle: bool = False
    validate: bool = False
    checkpoint_every: int | None = None
    backend: Backend = "auto"

    def params(self) -> WedcsParams:
        return WedcsParams.from_epsilon(self.epsilon, self.beta, self.visit_cap)


@dataclass
class CheckpointRecord:
    t: int
    muTilde: Fraction
    matchingSize: int
    hSize: int
    hUpdatesTotal: int
    dirtyCount: int
    rebuilds: int
    oracleMu: int | None = None
    validatorPass: bool | None = None

    def to_json(self) -> str:
        d = dict(self.__dict__)
        d["muTilde"] = decimal12(self.muTilde)
        return json.dumps(d, separators=(", ", ": "))


def decimal12(x: Fraction) -> float:
    with localcontext() as ctx:
        ctx.prec = 40
        dec = Decimal(x.numerator) / Decimal(x.denominator)
    return float(format(dec, ".12g"))


@dataclass
class RunResult:
    records: list[CheckpointRecord] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    matcher: DynamicMatcher | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def oracle_mu(matcher: DynamicMatcher) -> int | None:
    """Exact matching number of the live graph, or ``None`` when out of reach."""
    w = matcher.wedcs
    edges = w.live_edges()
    if len(edges) > ORACLE_EDGE_LIMIT:
        log.warning("oracle skipped: %d edges exceed %d", len(edges), ORACLE_EDGE_LIMIT)
        return None
    if w.n_left is not None:
        return hk_exact(BipartiteView.from_edges(w.n, edges, w.n_left)).size
    if w.n > EXHAUSTIVE_LIMIT:
        log.warning("oracle skipped: general graph with %d vertices", w.n)
        return None
    return exhaustive_mu(w.n, edges)


def approximation_failures(matcher: DynamicMatcher, mu: int) -> list[str]:
    """Check the maintained sizes against the exact matching number."""
    w = matcher.wedcs
    eps = matcher.params.epsilon
    bip = w.n_left is not None
    n = w.n
    out = []
    mt = w.mu_tilde()
    if mt > (mu if bip else Fraction(3, 2) * mu):
        out.append(f"muTilde {mt} exceeds the fractional optimum bound for mu={mu}")
    if matcher.deletions:
        frac_floor = mu - 6 * eps * n
    else:
        frac_floor = (1 - 2 * eps) * mu
    if mt < frac_floor:
        out.append(f"muTilde {mt} below {frac_floor} (mu={mu})")
    if matcher.integral is not None:
        size = matcher.integral.size
        floor = mu - 6 * eps * n if matcher.deletions else (1 - 3 * eps) * mu
        if size < floor:
            out.append(f"|M|={size} below {floor} (mu={mu})")
        try:
            matcher.integral.current_matching().check(w.live_edges())
        except AssertionError as exc:
            out.append(f"M is not a matching of the live graph: {exc}")
    return out


def rebuild_failures(matcher: DynamicMatcher) -> list[str]:
    im = matcher.integral
    if im is None or matcher.deletions:
        return []
    eps = im.epsilon
    n = matcher.wedcs.n
    out = []
    if im.stats.sum_rebuild_sizes > n / eps + n:
        out.append(f"rebuild sizes sum to {im.stats.sum_rebuild_sizes} > n/eps + n")
    sizes = im.stats.sizes
    for a, b in zip(sizes, sizes[1:]):
        if a > (1 - eps) * b:
            out.append(f"consecutive rebuild sizes {a} -> {b} grow by less than 1/(1-eps)")
            break
    return out


def run_stream(
    config: RunConfig, header: Header, events: list[Event], result: RunResult | None = None
) -> Iterator[CheckpointRecord]:
    """Yield a record at every checkpoint and at the end of the stream.

    Audit failures are collected in ``result.failures``; illegal events raise
    :class:`InputError`.
    """
    result = result if result is not None else RunResult()
    mode = config.mode or ("int" if header.bipartite else "frac")
    if mode == "int" and not header.bipartite:
        raise InputError("integral mode needs a bipartite stream")
    try:
        params = config.params()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    matcher = DynamicMatcher(
        header.n,
        params,
        header.n_left if header.bipartite else None,
        integral=mode == "int",
        deletions=config.deletions,
        backend=config.backend,
    )
    result.matcher = matcher
    w = matcher.wedcs
    every = config.checkpoint_every
    last_checkpoint_t = -1

    def checkpoint() -> CheckpointRecord:
        t = matcher.events
        rec = CheckpointRecord(
            t=t,
            muTilde=w.mu_tilde(),
            matchingSize=matcher.matching_size,
            hSize=w.size_h,
            hUpdatesTotal=w.h_insertions + w.h_deletions,
            dirtyCount=w.dirty_count(),
            rebuilds=0 if matcher.integral is None else matcher.integral.stats.rebuilds,
        )
        if config.oracle:
            rec.oracleMu = oracle_mu(matcher)
            if rec.oracleMu is not None:
                result.failures.extend(
                    f"t={t}: {msg}" for msg in approximation_failures(matcher, rec.oracleMu)
                )
        if config.validate:
            snap = w.snapshot()
            edcs = validate_edcs(snap, "clean")
            slack = verify_feasibility_and_slackness(snap, "clean")
            rec.validatorPass = edcs.passed and slack.passed
            if not edcs.passed:
                result.failures.append(
                    f"t={t}: EDCS violated (overfull {edcs.overfull[:3]}, "
                    f"underfull {edcs.underfull[:3]}, {edcs.inconsistent[:1]})"
                )
            result.failures.extend(f"t={t}: {msg}" for msg in slack.failures())
        result.records.append(rec)
        return rec

    for ev in events:
        if ev.kind == "q":
            # one record per instant, however many checkpoints ask for it
            if last_checkpoint_t != matcher.events:
                yield checkpoint()
                last_checkpoint_t = matcher.events
            continue
        try:
            if ev.kind == "ie":
                matcher.insert_edge(ev.u, ev.v)
            else:
                if not config.deletions:
                    raise InputError(
                        f"line {ev.line}: vertex deletion {header.label(ev.u)} "
                        "in an insertion-only run (pass --deletions)"
                    )
                matcher.delete_vertex(ev.u)
        except GraphError as exc:
            raise InputError(f"line {ev.line}: {exc}") from None
        if every and matcher.events % every == 0:
            yield checkpoint()
            last_checkpoint_t = matcher.events
    if last_checkpoint_t != matcher.events:
        yield checkpoint()

    if config.oracle:
        mu = oracle_mu(matcher)
        budget_mode = "with-deletions" if config.deletions else "incremental"
        if budget_mode == "with-deletions" or mu is not None:
            rep = audit_budgets(w, mu, budget_mode, general=not header.bipartite)
            if not rep.passed:
                result.failures.append(
                    f"budget audit failed: updates {rep.h_updates}/{rep.update_bound}, "
                    f"dirty {rep.dirty}/{rep.dirty_bound}, scans {rep.max_edge_scans}/{rep.scan_bound}"
                )
        result.failures.extend(rebuild_failures(matcher))
