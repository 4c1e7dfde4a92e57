# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels: the weighted-EDCS maintainer and Hopcroft-Karp.

Both mirror the pure-Python code in ``maintainer.py`` and ``hk.py``
operation for operation, including iteration order, so the two backends
reach identical states.
"""

from fractions import Fraction

from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map

from .graph import GraphError
from .snapshot import Snapshot

cdef long long INF = 1LL << 60


cdef class WedcsMaintainer:
    cdef public object params
    cdef public object on_change
    cdef readonly int beta
    cdef readonly long long visit_cap
    cdef int _n
    cdef int _n_left
    cdef vector[char] alive
    cdef vector[vector[int]] adj
    cdef vector[int] dead_in_adj
    cdef vector[int] eu
    cdef vector[int] ev
    cdef vector[char] edge_alive
    cdef unordered_map[long long, int] pairs
    cdef int m
    cdef vector[int] mult
    cdef vector[int] deg
    cdef vector[vector[int]] hadj
    cdef vector[int] slot_u
    cdef vector[int] slot_v
    cdef long long hsize
    cdef vector[long long] counts
    cdef vector[long long] visits
    cdef vector[long long] scans
    cdef readonly long long h_insertions
    cdef readonly long long h_deletions
    cdef readonly long long fix_vertex_calls
    cdef readonly long long per_edge_scans
    cdef readonly long long vertex_deletions
    cdef long long sumsq
    cdef vector[int] agenda

    backend = "cython"

    def __init__(self, int n, params, n_left=None, on_change=None):
        if n < 0 or (n_left is not None and not 0 <= n_left <= n):
            raise GraphError(f"bad vertex counts n={n} n_left={n_left}")
        self.params = params
        self.beta = params.beta
        self.visit_cap = params.visit_cap
        self.on_change = on_change
        self._n = n
        self._n_left = -1 if n_left is None else n_left
        self.alive.assign(n, 1)
        self.adj.resize(n)
        self.dead_in_adj.assign(n, 0)
        self.deg.assign(n, 0)
        self.hadj.resize(n)
        self.visits.assign(n, 0)
        self.counts.assign(max(self.beta, 1) + 1, 0)
        self.m = 0
        self.hsize = 0
        self.sumsq = 0

    # -- queries ---------------------------------------------------------

    @property
    def n(self):
        return self._n

    @property
    def n_left(self):
        return None if self._n_left < 0 else self._n_left

    @property
    def num_edges(self):
        return self.m

    @property
    def size_h(self):
        return self.hsize

    def deg_h(self, int v):
        return self.deg[v]

    def is_alive(self, int v):
        return bool(self.alive[v])

    def is_dirty(self, int v):
        return self.visits[v] >= self.visit_cap

    def dirty_count(self):
        cdef int v, c = 0
        for v in range(self._n):
            if self.visits[v] >= self.visit_cap:
                c += 1
        return c

    def visit_counts(self):
        return [self.visits[v] for v in range(self._n)]

    @property
    def edge_scans(self):
        return [self.scans[e] for e in range(<int>self.scans.size())]

    cdef inline long long _key(self, int u, int v):
        if u > v:
            u, v = v, u
        return <long long>u * self._n + v

    def multiplicity(self, int u, int v):
        cdef long long key = self._key(u, v)
        if self.pairs.count(key) == 0:
            return 0
        return self.mult[self.pairs[key]]

    cdef inline int _other(self, int e, int v):
        return self.ev[e] if self.eu[e] == v else self.eu[e]

    def h_neighbors(self, int v):
        return [self._other(e, v) for e in self.hadj[v]]

    def live_neighbors(self, int v):
        return [self._other(e, v) for e in self.adj[v] if self.edge_alive[e]]

    def h_edges(self):
        cdef int e
        out = []
        for e in range(<int>self.mult.size()):
            if self.mult[e] > 0:
                out.append((min(self.eu[e], self.ev[e]), max(self.eu[e], self.ev[e]), self.mult[e]))
        out.sort()
        return out

    def live_edges(self):
        cdef int e
        return [(self.eu[e], self.ev[e]) for e in range(<int>self.eu.size()) if self.edge_alive[e]]

    def counters(self):
        from .maintainer import MaintainerCounters

        return MaintainerCounters(
            self.h_insertions, self.h_deletions, self.fix_vertex_calls, self.per_edge_scans
        )

    def max_edge_scans(self):
        cdef long long best = 0
        cdef size_t e
        for e in range(self.scans.size()):
            if self.scans[e] > best:
                best = self.scans[e]
        return best

    def potential(self):
        return self.hsize * (2 * self.beta - 1) - self.sumsq

    def mu_tilde(self):
        total = Fraction(0)
        cdef int d
        for d in range(1, <int>self.counts.size()):
            if self.counts[d]:
                total += Fraction(self.counts[d], d)
        return total

    def mu_tilde_float(self):
        cdef double t = 0.0
        cdef int d
        for d in range(1, <int>self.counts.size()):
            if self.counts[d]:
                t += <double>self.counts[d] / d
        return t

    def h_support_adjacency(self):
        if self._n_left < 0:
            raise GraphError("H support adjacency needs a bipartite graph")
        cdef int v
        out = []
        for v in range(self._n_left):
            out.append(sorted(self._other(e, v) - self._n_left for e in self.hadj[v]))
        return out

    def snapshot(self):
        cdef int v
        return Snapshot.build(
            self._n,
            self.beta,
            self.live_edges(),
            {(u, w): k for u, w, k in self.h_edges()},
            n_left=self.n_left,
            alive=[bool(self.alive[v]) for v in range(self._n)],
            deg_h=[self.deg[v] for v in range(self._n)],
            dirty=[v for v in range(self._n) if self.visits[v] >= self.visit_cap],
        )

    # -- graph plumbing --------------------------------------------------

    cdef str _label(self, int v):
        if self._n_left < 0:
            return str(v)
        if v < self._n_left:
            return f"L{v}"
        return f"R{v - self._n_left}"

    cdef _check_vertex(self, int v):
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range [0, {self._n})")
        if not self.alive[v]:
            raise GraphError(f"vertex {self._label(v)} is deleted")

    cdef int _add_edge(self, int u, int v) except -1:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at {self._label(u)}")
        if self._n_left >= 0 and (u < self._n_left) == (v < self._n_left):
            raise GraphError(
                f"edge ({self._label(u)}, {self._label(v)}) joins two vertices on the same side"
            )
        cdef long long key = self._key(u, v)
        if self.pairs.count(key):
            raise GraphError(f"duplicate edge ({self._label(u)}, {self._label(v)})")
        cdef int e = <int>self.eu.size()
        self.pairs[key] = e
        self.eu.push_back(u)
        self.ev.push_back(v)
        self.edge_alive.push_back(1)
        self.mult.push_back(0)
        self.slot_u.push_back(-1)
        self.slot_v.push_back(-1)
        self.scans.push_back(0)
        self.adj[u].push_back(e)
        self.adj[v].push_back(e)
        self.m += 1
        return e

    cdef void _compact(self, int v):
        cdef vector[int] keep
        cdef int e
        for e in self.adj[v]:
            if self.edge_alive[e]:
                keep.push_back(e)
        self.adj[v].swap(keep)
        self.dead_in_adj[v] = 0

    # -- updates ---------------------------------------------------------

    def insert_edge(self, int u, int v):
        cdef int e = self._add_edge(u, v)
        self._fix_edge(e)
        self._drain()
        return e

    def delete_vertex(self, int v):
        self._check_vertex(v)
        cdef int e, x, k, i
        cdef int killed = 0
        for i in range(<int>self.adj[v].size()):
            e = self.adj[v][i]
            if not self.edge_alive[e]:
                continue
            self.edge_alive[e] = 0
            killed += 1
            self.pairs.erase(self._key(self.eu[e], self.ev[e]))
            x = self._other(e, v)
            self.dead_in_adj[x] += 1
            if 2 * self.dead_in_adj[x] > <int>self.adj[x].size():
                self._compact(x)
        self.m -= killed
        self.alive[v] = 0
        self.adj[v].clear()
        self.dead_in_adj[v] = 0
        self.vertex_deletions += 1
        cdef vector[int] hs = self.hadj[v]
        removed = []
        for e in hs:
            k = self.mult[e]
            removed.append((self._other(e, v), k))
            self._change(e, -k)
            self.h_deletions += k
        for i in range(len(removed) - 1, -1, -1):
            self.agenda.push_back(removed[i][0])
        self._drain()
        return removed

    # -- repair steps ----------------------------------------------------

    cdef void _unlink(self, int x, int p):
        cdef vector[int]* lst = &self.hadj[x]
        cdef int last = lst.back()
        lst.pop_back()
        if p < <int>lst.size():
            lst[0][p] = last
            if self.eu[last] == x:
                self.slot_u[last] = p
            else:
                self.slot_v[last] = p

    cdef int _change(self, int e, int delta) except -1:
        cdef int u = self.eu[e], v = self.ev[e]
        cdef int du = self.deg[u], dv = self.deg[v]
        cdef int nu = du + delta, nv = dv + delta
        cdef int f, w, dw, k, old, new, a, b
        cdef size_t i
        for i in range(self.hadj[u].size()):
            f = self.hadj[u][i]
            if f == e:
                continue
            dw = self.deg[self._other(f, u)]
            k = self.mult[f]
            a = du if du > dw else dw
            b = nu if nu > dw else dw
            self.counts[a] -= k
            self.counts[b] += k
        for i in range(self.hadj[v].size()):
            f = self.hadj[v][i]
            if f == e:
                continue
            dw = self.deg[self._other(f, v)]
            k = self.mult[f]
            a = dv if dv > dw else dw
            b = nv if nv > dw else dw
            self.counts[a] -= k
            self.counts[b] += k
        old = self.mult[e]
        new = old + delta
        if new < 0:
            raise ValueError(f"multiplicity of edge {e} would become {new}")
        if old:
            self.counts[du if du > dv else dv] -= old
        if new:
            self.counts[nu if nu > nv else nv] += new
        if old == 0 and new > 0:
            self.slot_u[e] = <int>self.hadj[u].size()
            self.slot_v[e] = <int>self.hadj[v].size()
            self.hadj[u].push_back(e)
            self.hadj[v].push_back(e)
        elif old > 0 and new == 0:
            self._unlink(u, self.slot_u[e])
            self._unlink(v, self.slot_v[e])
            self.slot_u[e] = -1
            self.slot_v[e] = -1
        self.mult[e] = new
        self.deg[u] = nu
        self.deg[v] = nv
        self.hsize += delta
        self.sumsq += <long long>nu * nu - <long long>du * du + <long long>nv * nv - <long long>dv * dv
        if self.on_change is not None:
            self.on_change(u, v, delta)
        return 0

    cdef int _fix_edge(self, int e) except -1:
        cdef int u = self.eu[e], v = self.ev[e]
        cdef int s = self.deg[u] + self.deg[v]
        if s > self.beta and self.mult[e] > 0:
            self._change(e, -1)
            self.h_deletions += 1
        elif s < self.beta - 1:
            self._change(e, 1)
            self.h_insertions += 1
        else:
            return 0
        self.agenda.push_back(v)
        self.agenda.push_back(u)
        return 1

    cdef int _fix_vertex(self, int v) except -1:
        if not self.alive[v]:
            return 0
        self.visits[v] += 1
        self.fix_vertex_calls += 1
        cdef size_t i
        cdef int e
        cdef vector[int] hs
        if self.visits[v] < self.visit_cap:
            i = 0
            while i < self.adj[v].size():
                e = self.adj[v][i]
                i += 1
                if self.edge_alive[e]:
                    self.scans[e] += 1
                    self.per_edge_scans += 1
                    self._fix_edge(e)
        else:
            hs = self.hadj[v]
            for i in range(hs.size()):
                self._fix_edge(hs[i])
        return 0

    cdef int _drain(self) except -1:
        cdef int v
        while not self.agenda.empty():
            v = self.agenda.back()
            self.agenda.pop_back()
            self._fix_vertex(v)
        return 0


def hopcroft_karp(adj, int n_right, int phases):
    """Compiled twin of ``hk.hopcroft_karp_py``; ``phases < 0`` means unbounded."""
    cdef int n_left = len(adj)
    cdef vector[int] indptr
    cdef vector[int] indices
    indptr.push_back(0)
    for nbrs in adj:
        for r in nbrs:
            indices.push_back(r)
        indptr.push_back(<int>indices.size())
    cdef vector[int] mate_l
    cdef vector[int] mate_r
    cdef vector[long long] dist
    cdef vector[int] queue
    cdef vector[int] it
    cdef vector[int] stack
    cdef vector[int] picks
    mate_l.assign(n_left, -1)
    mate_r.assign(n_right, -1)
    cdef int done = 0
    cdef int u, w, x, root, step, head, j, a, b
    cdef long long found, du
    cdef bint augmented
    while phases < 0 or done < phases:
        dist.assign(n_left, INF)
        queue.clear()
        for u in range(n_left):
            if mate_l[u] < 0:
                dist[u] = 0
                queue.push_back(u)
        found = INF
        head = 0
        while head < <int>queue.size():
            u = queue[head]
            head += 1
            if dist[u] >= found:
                continue
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                x = mate_r[w]
                if x < 0:
                    if found == INF:
                        found = dist[u]
                elif dist[x] == INF:
                    dist[x] = dist[u] + 1
                    queue.push_back(x)
        if found == INF:
            break
        it.assign(n_left, 0)
        for root in range(n_left):
            if mate_l[root] >= 0 or dist[root] != 0:
                continue
            stack.clear()
            picks.clear()
            stack.push_back(root)
            augmented = False
            while not stack.empty():
                u = stack.back()
                du = dist[u]
                step = -1
                while it[u] < indptr[u + 1] - indptr[u]:
                    w = indices[indptr[u] + it[u]]
                    it[u] += 1
                    x = mate_r[w]
                    if x < 0:
                        if du == found:
                            picks.push_back(w)
                            for j in range(<int>stack.size()):
                                a = stack[j]
                                b = picks[j]
                                mate_l[a] = b
                                mate_r[b] = a
                                dist[a] = INF
                            augmented = True
                            break
                    elif du < found and dist[x] == du + 1:
                        step = w
                        break
                if augmented:
                    break
                if step >= 0:
                    picks.push_back(step)
                    stack.push_back(mate_r[step])
                else:
                    dist[u] = INF
                    stack.pop_back()
                    if not picks.empty():
                        picks.pop_back()
        done += 1
    return [mate_l[u] for u in range(n_left)]
