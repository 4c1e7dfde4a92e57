"""Read-only view of a graph together with its multiset ``H``.

Validators, the slackness checker and the oracles all work on a
:class:`Snapshot`, so they never touch a backend's internal arrays and can
be pointed at hand-built or generated instances just as easily.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Snapshot:
    n: int
    beta: int
    edges: tuple[tuple[int, int], ...]
    h: dict[tuple[int, int], int]
    alive: tuple[bool, ...]
    n_left: int | None = None
    deg_h: tuple[int, ...] | None = None
    dirty: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def build(
        cls,
        n: int,
        beta: int,
        edges,
        h,
        *,
        n_left: int | None = None,
        alive=None,
        deg_h=None,
        dirty=(),
    ) -> "Snapshot":
        """Normalise edge pairs and fill in defaults.

        ``h`` may be a mapping ``pair -> multiplicity`` or an iterable of
        pairs (each occurrence counts as one copy).
        """
        if isinstance(h, dict):
            hm: dict[tuple[int, int], int] = {}
            for (u, v), k in h.items():
                if k:
                    hm[pair(u, v)] = hm.get(pair(u, v), 0) + k
        else:
            hm = {}
            for u, v in h:
                hm[pair(u, v)] = hm.get(pair(u, v), 0) + 1
        return cls(
            n=n,
            beta=beta,
            edges=tuple(pair(u, v) for u, v in edges),
            h=hm,
            alive=tuple(alive) if alive is not None else (True,) * n,
            n_left=n_left,
            deg_h=tuple(deg_h) if deg_h is not None else None,
            dirty=frozenset(dirty),
        )

    def recount_degrees(self) -> list[int]:
        deg = [0] * self.n
        for (u, v), k in self.h.items():
            deg[u] += k
            deg[v] += k
        return deg

    def degrees(self) -> list[int]:
        """H-degrees as reported by the producer, else recounted."""
        return list(self.deg_h) if self.deg_h is not None else self.recount_degrees()

    @property
    def h_size(self) -> int:
        return sum(self.h.values())

    def h_support(self) -> list[tuple[int, int]]:
        return sorted(self.h)
