"""Path values over an idempotent additive reduct: A(u, v) = join of walk weights."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import TernaryGammaSemiring

UNDEFINED = -1


@dataclass
class WeightedGraph:
    vertices: int
    edges: list = field(default_factory=list)  # (src, dst, weight)

    def validate(self, n: int) -> None:
        for s, d, w in self.edges:
            if not (0 <= s < self.vertices and 0 <= d < self.vertices):
                raise ValueError(f"edge ({s}, {d}) has a vertex outside 0..{self.vertices - 1}")
            if not 0 <= w < n:
                raise ValueError(f"edge weight {w} outside the carrier 0..{n - 1}")


def parse_graph(text: str) -> WeightedGraph:
    """Read 'vertices N' then one 'src dst weight' line per edge; '#' starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0].split()[0] != "vertices":
        raise ValueError("graph file must start with 'vertices N'")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("malformed header line")
    g = WeightedGraph(int(head[1]))
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"malformed edge line {ln!r}")
        g.edges.append(tuple(int(p) for p in parts))
    return g


def _join(add, x, y):
    """Join in the semilattice, with UNDEFINED as the bottom."""
    out = np.where(x == UNDEFINED, y, np.where(y == UNDEFINED, x, add[np.maximum(x, 0), np.maximum(y, 0)]))
    return out


def edge_matrix(add: np.ndarray, g: WeightedGraph) -> np.ndarray:
    E = np.full((g.vertices, g.vertices), UNDEFINED, dtype=np.int64)
    for s, d, w in g.edges:
        E[s, d] = w if E[s, d] == UNDEFINED else add[E[s, d], w]
    return E


@dataclass
class PathResult:
    reach: np.ndarray  # A(u, v), UNDEFINED when no walk
    path: np.ndarray  # {A A A}_g, UNDEFINED when no walk
    stabilized: bool
    iterations: int

    def to_dict(self) -> dict:
        def conv(mat):
            return [[None if v == UNDEFINED else int(v) for v in row] for row in mat]

        return {"A": conv(self.reach), "path": conv(self.path), "stabilized": self.stabilized,
                "partial": not self.stabilized, "iterations": self.iterations}


def ternary_path_values(ts: TernaryGammaSemiring, gamma: str, g: WeightedGraph, horizon: int | None = None) -> PathResult:
    """Iterate A <- E join (A extended by one edge) until it stops changing or the horizon runs out."""
    add = ts.add
    ar = np.arange(ts.n)
    if not np.array_equal(add[ar, ar], ar):
        raise ValueError("addition is not idempotent; walk joins are not well behaved")
    g.validate(ts.n)
    M = ts.op(gamma)
    V = g.vertices
    horizon = V * ts.n if horizon is None else horizon
    E = edge_matrix(add, g)
    A = E.copy()
    stable, it = False, 0
    while it < horizon:
        it += 1
        nxt = E.copy()
        for x in range(V):
            # walks u -> x followed by the edge x -> v
            ext = np.where((A[:, x, None] == UNDEFINED) | (E[None, x, :] == UNDEFINED), UNDEFINED,
                           add[np.maximum(A[:, x, None], 0), np.maximum(E[None, x, :], 0)])
            nxt = _join(add, nxt, ext)
        if np.array_equal(nxt, A):
            stable = True
            break
        A = nxt
    safe = np.maximum(A, 0)
    path = np.where(A == UNDEFINED, UNDEFINED, M[safe, safe, safe])
    return PathResult(A, path, stable, it)


def walk_weight_sets(add: np.ndarray, g: WeightedGraph) -> list:
    """W[u][v] = set of weights of all walks u -> v, by search over (vertex, weight) states."""
    V = g.vertices
    out = [[set() for _ in range(V)] for _ in range(V)]
    adj = [[] for _ in range(V)]
    for s, d, w in g.edges:
        adj[s].append((d, w))
    for u in range(V):
        seen = set((d, w) for d, w in adj[u])
        stack = list(seen)
        while stack:
            x, acc = stack.pop()
            out[u][x].add(acc)
            for d, w in adj[x]:
                st = (d, int(add[acc, w]))
                if st not in seen:
                    seen.add(st)
                    stack.append(st)
    return out


def path_values_by_enumeration(ts: TernaryGammaSemiring, gamma: str, g: WeightedGraph) -> np.ndarray:
    """Join of {W(p) W(q) W(r)} over all walk triples u -> v; UNDEFINED when there is no walk."""
    M = ts.op(gamma)
    W = walk_weight_sets(ts.add, g)
    V = g.vertices
    out = np.full((V, V), UNDEFINED, dtype=np.int64)
    for u in range(V):
        for v in range(V):
            ws = sorted(W[u][v])
            acc = UNDEFINED
            for p in ws:
                for q in ws:
                    for r in ws:
                        val = int(M[p, q, r])
                        acc = val if acc == UNDEFINED else int(ts.add[acc, val])
            out[u, v] = acc
    return out
