"""Line-oriented update streams.

Format::

    bipartite <n_left> <n_right>      or      general <n>
    ie <u> <v>          insert edge (bipartite: u is a left index, v a right index)
    dv L3 | dv R0       delete a vertex (bipartite)
    dv <id>             delete a vertex (general)
    q                   checkpoint
    # comment

Events carry global vertex ids: right vertex ``j`` is ``n_left + j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Literal

from .lowerbound import build_instance


class StreamError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Header:
    mode: Literal["bipartite", "general"]
    n_left: int
    n_right: int = 0

    @property
    def n(self) -> int:
        return self.n_left + self.n_right

    @property
    def bipartite(self) -> bool:
        return self.mode == "bipartite"

    def render(self) -> str:
        if self.bipartite:
            return f"bipartite {self.n_left} {self.n_right}"
        return f"general {self.n_left}"

    def label(self, v: int) -> str:
        if not self.bipartite:
            return str(v)
        return f"L{v}" if v < self.n_left else f"R{v - self.n_left}"


@dataclass(frozen=True)
class Event:
    kind: Literal["ie", "dv", "q"]
    u: int = -1
    v: int = -1
    line: int | None = None

    def render(self, header: Header) -> str:
        if self.kind == "q":
            return "q"
        if self.kind == "dv":
            return f"dv {header.label(self.u)}"
        if header.bipartite:
            return f"ie {self.u} {self.v - header.n_left}"
        return f"ie {self.u} {self.v}"


EMPTY_HEADER = Header("general", 0)


def _int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise StreamError(f"expected an integer, got {tok!r}", lineno) from None
    if val < 0:
        raise StreamError(f"negative id {val}", lineno)
    return val


def parse_header(line: str, lineno: int) -> Header:
    parts = line.split()
    if parts[0] == "bipartite" and len(parts) == 3:
        return Header("bipartite", _int(parts[1], lineno), _int(parts[2], lineno))
    if parts[0] == "general" and len(parts) == 2:
        return Header("general", _int(parts[1], lineno))
    raise StreamError(f"bad header {line!r}", lineno)


def parse_stream(lines: Iterable[str]) -> tuple[Header, list[Event]]:
    """Parse a stream; vertex ranges are checked, liveness is left to the run."""
    header: Header | None = None
    events: list[Event] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = parse_header(line, lineno)
            continue
        parts = line.split()
        op = parts[0]
        if op == "q" and len(parts) == 1:
            events.append(Event("q", line=lineno))
        elif op == "ie" and len(parts) == 3:
            a, b = _int(parts[1], lineno), _int(parts[2], lineno)
            if header.bipartite:
                if a >= header.n_left or b >= header.n_right:
                    raise StreamError(f"edge ({a}, {b}) outside {header.render()}", lineno)
                b += header.n_left
            elif a >= header.n or b >= header.n:
                raise StreamError(f"edge ({a}, {b}) outside {header.render()}", lineno)
            events.append(Event("ie", a, b, lineno))
        elif op == "dv" and len(parts) == 2:
            events.append(Event("dv", _vertex_token(parts[1], header, lineno), line=lineno))
        else:
            raise StreamError(f"cannot parse {line!r}", lineno)
    return header or EMPTY_HEADER, events


def _vertex_token(tok: str, header: Header, lineno: int) -> int:
    if header.bipartite:
        side, rest = tok[:1].upper(), tok[1:]
        if side not in ("L", "R") or not rest:
            raise StreamError(f"expected L<id> or R<id>, got {tok!r}", lineno)
        idx = _int(rest, lineno)
        size = header.n_left if side == "L" else header.n_right
        if idx >= size:
            raise StreamError(f"vertex {tok} outside {header.render()}", lineno)
        return idx if side == "L" else header.n_left + idx
    v = _int(tok, lineno)
    if v >= header.n:
        raise StreamError(f"vertex {v} outside {header.render()}", lineno)
    return v


def format_stream(header: Header, events: Iterable[Event], comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(header.render())
    out.extend(ev.render(header) for ev in events)
    return "\n".join(out) + "\n"


# -- generators -------------------------------------------------------------


def random_bipartite(n_left: int, n_right: int, m: int, seed: int) -> tuple[Header, list[Event]]:
    """``m`` distinct uniformly random left-right pairs in random order."""
    if m > n_left * n_right:
        raise ValueError(f"m={m} exceeds the {n_left * n_right} possible edges")
    rng = random.Random(seed)
    codes = rng.sample(range(n_left * n_right), m)
    events = [Event("ie", c // n_right, n_left + c % n_right) for c in codes]
    return Header("bipartite", n_left, n_right), events


def insert_then_delete(
    n_left: int, n_right: int, m: int, rate: float, seed: int
) -> tuple[Header, list[Event]]:
    """Insertions interleaved with deletions of ``round(rate * n)`` random live vertices.

    Deletion slots are spread uniformly over the stream.  Each insertion
    joins a random live left vertex to a random live right vertex; once no
    fresh pair is left among live vertices the remaining insertions are
    dropped.
    """
    if not 0 <= rate <= 1:
        raise ValueError(f"deletion rate must lie in [0, 1], got {rate}")
    if m > n_left * n_right:
        raise ValueError(f"m={m} exceeds the {n_left * n_right} possible edges")
    rng = random.Random(seed)
    n = n_left + n_right
    deletions = round(rate * n)
    total = m + deletions
    del_slots = set(rng.sample(range(total), deletions))
    alive_l = list(range(n_left))
    alive_r = list(range(n_left, n))
    used: set[tuple[int, int]] = set()
    events: list[Event] = []
    for t in range(total):
        if t in del_slots:
            pool = alive_l + alive_r
            if not pool:
                continue
            v = pool[rng.randrange(len(pool))]
            (alive_l if v < n_left else alive_r).remove(v)
            events.append(Event("dv", v))
            continue
        pick = None
        for _ in range(32):
            if not alive_l or not alive_r:
                break
            cand = (rng.choice(alive_l), rng.choice(alive_r))
            if cand not in used:
                pick = cand
                break
        if pick is None:
            free = [(a, b) for a in alive_l for b in alive_r if (a, b) not in used]
            if not free:
                continue
            pick = free[rng.randrange(len(free))]
        used.add(pick)
        events.append(Event("ie", *pick))
    return Header("bipartite", n_left, n_right), events


def lowerbound_stream(gamma: int) -> tuple[Header, list[Event], list[tuple[int, int]]]:
    """The tightness instance as insertions, plus its H-edges for the sidecar."""
    inst = build_instance(gamma)
    header = Header("bipartite", inst.n_left, inst.n_right)

    def lr(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < inst.n_left else (v, u)

    events = [Event("ie", *lr(u, v)) for u, v in inst.edges]
    return header, events, [lr(u, v) for u, v in inst.h_edges]


def format_sidecar(header: Header, h_edges: Iterable[tuple[int, int]]) -> str:
    """H listing: the stream header followed by one ``he <u> <v>`` line per copy."""
    out = [header.render()]
    for u, v in h_edges:
        out.append(f"he {u} {v - header.n_left}" if header.bipartite else f"he {u} {v}")
    return "\n".join(out) + "\n"


def parse_sidecar(lines: Iterable[str], header: Header) -> list[tuple[int, int]]:
    got: Header | None = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if got is None:
            got = parse_header(line, lineno)
            if got != header:
                raise StreamError(f"sidecar header {got.render()} does not match stream", lineno)
            continue
        parts = line.split()
        if parts[0] != "he" or len(parts) != 3:
            raise StreamError(f"cannot parse {line!r}", lineno)
        a, b = _int(parts[1], lineno), _int(parts[2], lineno)
        edges.append((a, b + header.n_left) if header.bipartite else (a, b))
    return edges
