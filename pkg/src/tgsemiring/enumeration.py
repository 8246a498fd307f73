"""Exhaustive enumeration of structures up to isomorphism.

The pruned search works per additive reduct.  Each ternary tensor is searched
on its multiset entries (commutativity makes the tensor a function of the
sorted triple) with distributivity and associativity propagated after every
assignment; tensors valid on their own are then combined into parameter
families whose mixed associativity constraints are checked in bulk.
Canonical forms remove isomorphic duplicates.

``brute_force_catalog`` is the unpruned reference: every symmetric tensor
family over every labelled monoid, filtered through the axiom predicates.
"""

from __future__ import annotations

import functools
import itertools
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .core import STRICT, AxiomMode, TernaryGammaSemiring

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 4
DEFAULT_MAX_GAMMA = 2
HARD_MAX_ORDER = 6
ORACLE_BUDGET = 5_000_000


class BoundExceeded(ValueError):
    """Requested parameters exceed the configured search bounds."""


# ---------------------------------------------------------------------------
# permutations and canonical forms


@functools.lru_cache(maxsize=None)
def perms_fixing_zero(n: int) -> np.ndarray:
    """All permutations of 0..n-1 with 0 fixed, one per row, in lexicographic order."""
    rows = [(0,) + p for p in itertools.permutations(range(1, n))]
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    arr.flags.writeable = False
    return arr


def _images(add: np.ndarray, ops: np.ndarray, perms: np.ndarray):
    """Tables relabelled by every permutation row: shapes (k,n,n) and (k,m,n,n,n)."""
    inv = np.argsort(perms, axis=1)
    k = perms.shape[0]
    rows = np.arange(k)
    a_img = perms[rows[:, None, None], add[inv[:, :, None], inv[:, None, :]]]
    o = ops[:, inv[:, :, None, None], inv[:, None, :, None], inv[:, None, None, :]]  # (m,k,n,n,n)
    o_img = perms[rows[None, :, None, None, None], o]
    return a_img, np.moveaxis(o_img, 0, 1)


@dataclass(frozen=True)
class CanonicalForm:
    """Least byte string ``add || M_1 || ... || M_m`` over admissible relabelings."""

    data: bytes
    permuted_gamma: bool = False
    relabeling: tuple = field(default=(), compare=False)
    gamma_order: tuple = field(default=(), compare=False)

    def hex(self) -> str:
        return self.data.hex()

    def structure(self, n: int, gamma) -> TernaryGammaSemiring:
        arr = np.frombuffer(self.data, dtype=np.uint8).astype(np.int64)
        return TernaryGammaSemiring(arr[: n * n].reshape(n, n), arr[n * n :].reshape(-1, n, n, n), gamma)


def canonical_form(ts: TernaryGammaSemiring, permute_gamma: bool = False) -> CanonicalForm:
    """Minimise the vectorised tables over all relabelings fixing 0 (and label orders if asked)."""
    perms = perms_fixing_zero(ts.n)
    a_img, o_img = _images(ts.add, ts.ops, perms)
    k = perms.shape[0]
    head = a_img.reshape(k, -1).astype(np.uint8)
    orders = list(itertools.permutations(range(ts.m))) if permute_gamma else [tuple(range(ts.m))]
    best = None
    for order in orders:
        body = o_img[:, list(order)].reshape(k, -1).astype(np.uint8)
        rows = np.concatenate([head, body], axis=1)
        # lexicographic argmin over rows
        idx = np.lexsort(rows.T[::-1])[0]
        cand = (rows[idx].tobytes(), int(idx), order)
        if best is None or cand[0] < best[0]:
            best = cand
    data, idx, order = best
    return CanonicalForm(data, permute_gamma, tuple(int(x) for x in perms[idx]), order)


def canonical_structure(ts: TernaryGammaSemiring, permute_gamma: bool = False) -> TernaryGammaSemiring:
    return canonical_form(ts, permute_gamma).structure(ts.n, ts.gamma)


def are_isomorphic(ts1: TernaryGammaSemiring, ts2: TernaryGammaSemiring, permute_gamma: bool = False):
    """A bijection preserving + and every ternary product, or None.

    With ``permute_gamma`` the result is ``(bijection, label_order)`` where the
    k-th operation of ``ts1`` corresponds to operation ``label_order[k]`` of ``ts2``.
    """
    if ts1.n != ts2.n or ts1.m != ts2.m:
        raise ValueError(f"size mismatch: ({ts1.n},{ts1.m}) vs ({ts2.n},{ts2.m})")
    n = ts1.n
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    orders = list(itertools.permutations(range(ts1.m))) if permute_gamma else [tuple(range(ts1.m))]
    for p in itertools.permutations(range(1, n)):
        f = np.array((0,) + p)
        if not np.array_equal(f[ts1.add[a, b]], ts2.add[f[a], f[b]]):
            continue
        for order in orders:
            if all(np.array_equal(f[ts1.ops[k][x, y, z]], ts2.ops[order[k]][f[x], f[y], f[z]]) for k in range(ts1.m)):
                bij = tuple(int(v) for v in f)
                return (bij, order) if permute_gamma else bij
    return None


# ---------------------------------------------------------------------------
# additive reducts


def _canonical_add(add: np.ndarray) -> bytes:
    perms = perms_fixing_zero(add.shape[0])
    inv = np.argsort(perms, axis=1)
    rows = np.arange(perms.shape[0])
    img = perms[rows[:, None, None], add[inv[:, :, None], inv[:, None, :]]].reshape(perms.shape[0], -1)
    return min(r.astype(np.uint8).tobytes() for r in img)


def _labelled_monoids(n: int):
    """Backtracking over the upper triangle of nonzero entries; yields every labelled table."""
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    t = -np.ones((n, n), dtype=np.int64)
    t[0, :] = np.arange(n)
    t[:, 0] = np.arange(n)
    a3, b3, c3 = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")

    def consistent():
        ab = t[a3, b3]
        bc = t[b3, c3]
        known = (ab >= 0) & (bc >= 0)
        lhs = np.where(known, t[np.where(ab >= 0, ab, 0), c3], -1)
        rhs = np.where(known, t[a3, np.where(bc >= 0, bc, 0)], -1)
        both = (lhs >= 0) & (rhs >= 0)
        return not np.any(both & (lhs != rhs))

    def rec(i):
        if i == len(cells):
            yield t.copy()
            return
        a, b = cells[i]
        for v in range(n):
            t[a, b] = t[b, a] = v
            if consistent():
                yield from rec(i + 1)
        t[a, b] = t[b, a] = -1

    yield from rec(0)


@functools.lru_cache(maxsize=None)
def _monoids_cached(n: int):
    seen = {}
    for tab in _labelled_monoids(n):
        key = _canonical_add(tab)
        seen.setdefault(key, None)
    out = []
    for key in sorted(seen):
        arr = np.frombuffer(key, dtype=np.uint8).astype(np.int64).reshape(n, n)
        arr.flags.writeable = False
        out.append(arr)
    return tuple(out)


def enumerate_additive_monoids(n: int) -> list:
    """Commutative monoid tables with identity 0, one per isomorphism class, sorted by bytes."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > HARD_MAX_ORDER:
        raise BoundExceeded(f"order {n} exceeds {HARD_MAX_ORDER}")
    return [t.copy() for t in _monoids_cached(n)]


def brute_force_monoids(n: int) -> list:
    """Reference count: every symmetric table with identity 0, associativity tested afterwards."""
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    if n ** len(cells) > ORACLE_BUDGET:
        raise BoundExceeded(f"brute-force monoid oracle too large for n={n}")
    keys = set()
    for vals in itertools.product(range(n), repeat=len(cells)):
        t = np.zeros((n, n), dtype=np.int64)
        t[0, :] = t[:, 0] = np.arange(n)
        for (a, b), v in zip(cells, vals):
            t[a, b] = t[b, a] = v
        if all(t[t[a, b], c] == t[a, t[b, c]] for a in range(n) for b in range(n) for c in range(n)):
            keys.add(_canonical_add(t))
    return [np.frombuffer(k, dtype=np.uint8).astype(np.int64).reshape(n, n) for k in sorted(keys)]


# ---------------------------------------------------------------------------
# pruned search for a single ternary tensor


@functools.lru_cache(maxsize=None)
def _orbits(n: int):
    """Sorted-triple ids: ``orb[a,b,c]`` indexes the multiset {a,b,c}; ``reps`` lists them."""
    reps = [t for t in itertools.combinations_with_replacement(range(n), 3)]
    index = {t: i for i, t in enumerate(reps)}
    orb = np.empty((n, n, n), dtype=np.int64)
    for a, b, c in itertools.product(range(n), repeat=3):
        orb[a, b, c] = index[tuple(sorted((a, b, c)))]
    orb.flags.writeable = False
    return reps, orb


def _generators(add: np.ndarray) -> list:
    """A minimal generating set of the additive monoid, found greedily from the top."""
    n = add.shape[0]

    def closure(gens):
        got = {0} | set(gens)
        while True:
            new = {int(add[x, y]) for x in got for y in got} - got
            if not new:
                return got
            got |= new

    gens = list(range(1, n))
    for g in reversed(range(1, n)):
        rest = [x for x in gens if x != g]
        if len(closure(rest)) == n:
            gens = rest
    return gens


class _Grid:
    """Index arrays reused across propagation rounds for one carrier size."""

    def __init__(self, n: int):
        self.n = n
        self.reps, self.orb = _orbits(n)
        g = np.meshgrid(*[np.arange(n)] * 4, indexing="ij")
        self.a4, self.b4, self.c4, self.d4 = g
        g = np.meshgrid(*[np.arange(n)] * 5, indexing="ij")
        self.a5, self.b5, self.c5, self.d5, self.e5 = g


@functools.lru_cache(maxsize=None)
def _grid(n: int) -> _Grid:
    return _Grid(n)


def _propagate(vals: np.ndarray, add: np.ndarray, mode: AxiomMode, G: _Grid) -> bool:
    """Fill forced entries in place; False on contradiction."""
    orb = G.orb
    while True:
        M = vals[orb]
        f_ids, f_vals = [], []
        if "T2" in mode:
            a, b, c, d = G.a4, G.b4, G.c4, G.d4
            s = add[a, b]
            r1, r2 = M[a, c, d], M[b, c, d]
            known = (r1 >= 0) & (r2 >= 0)
            val = add[np.where(r1 >= 0, r1, 0), np.where(r2 >= 0, r2, 0)]
            lhs = M[s, c, d]
            if np.any(known & (lhs >= 0) & (lhs != val)):
                return False
            force = known & (lhs < 0)
            if force.any():
                f_ids.append(orb[s[force], c[force], d[force]])
                f_vals.append(val[force])
        if "T4" in mode:
            a, b, c, d, e = G.a5, G.b5, G.c5, G.d5, G.e5
            X = M[a, b, c]
            Y = M[c, d, e]
            Xc, Yc = np.where(X >= 0, X, 0), np.where(Y >= 0, Y, 0)
            lhs = np.where(X >= 0, M[Xc, d, e], -1)
            rhs = np.where(Y >= 0, M[a, b, Yc], -1)
            if np.any((lhs >= 0) & (rhs >= 0) & (lhs != rhs)):
                return False
            f1 = (lhs >= 0) & (Y >= 0) & (rhs < 0)
            if f1.any():
                f_ids.append(orb[a[f1], b[f1], Yc[f1]])
                f_vals.append(lhs[f1])
            f2 = (rhs >= 0) & (X >= 0) & (lhs < 0)
            if f2.any():
                f_ids.append(orb[Xc[f2], d[f2], e[f2]])
                f_vals.append(rhs[f2])
        if not f_ids:
            return True
        ids = np.concatenate(f_ids)
        fv = np.concatenate(f_vals)
        order = np.lexsort((fv, ids))
        ids, fv = ids[order], fv[order]
        same = ids[1:] == ids[:-1]
        if np.any(same & (fv[1:] != fv[:-1])):
            return False
        vals[ids] = fv


def single_operations(add: np.ndarray, mode: AxiomMode, stats: dict | None = None) -> list:
    """Every symmetric tensor over ``add`` satisfying the single-label axioms of ``mode``.

    Returns flat multiset-value vectors (index = sorted-triple id), in the order
    the search finds them (values tried ascending along the variable order).
    """
    n = add.shape[0]
    G = _grid(n)
    reps = G.reps
    vals = -np.ones(len(reps), dtype=np.int64)
    if "T3" in mode:
        for i, t in enumerate(reps):
            if 0 in t:
                vals[i] = 0
    gens = set(_generators(add))
    order = sorted(range(len(reps)), key=lambda i: (not set(reps[i]) <= gens, reps[i]))
    out = []
    stats = stats if stats is not None else {}
    stats.setdefault("nodes", 0)

    def rec(v):
        stats["nodes"] += 1
        if not _propagate(v, add, mode, G):
            return
        free = [i for i in order if v[i] < 0]
        if not free:
            out.append(v.copy())
            return
        i = free[0]
        for x in range(n):
            w = v.copy()
            w[i] = x
            rec(w)

    rec(vals)
    return out


# ---------------------------------------------------------------------------
# combining tensors into parameter families


def _cross_compatible(A: np.ndarray, Bs: np.ndarray, G: _Grid) -> np.ndarray:
    """For tensor A and a batch Bs (K,n,n,n): mixed associativity in both label orders."""
    a, b, c, d, e = G.a5, G.b5, G.c5, G.d5, G.e5
    k = np.arange(Bs.shape[0])[:, None, None, None, None, None]
    l1 = Bs[k, A[a, b, c], d, e]
    r1 = A[a, b, Bs[k, c, d, e]]
    l2 = A[Bs[k, a, b, c], d, e]
    r2 = Bs[k, a, b, A[c, d, e]]
    flat = lambda x: x.reshape(Bs.shape[0], -1)  # noqa: E731
    return np.all(flat(l1) == flat(r1), axis=1) & np.all(flat(l2) == flat(r2), axis=1)


def _families(singles: list, m: int, mode: AxiomMode, add: np.ndarray, stats: dict, permute_gamma: bool):
    """Yield index tuples (i_1..i_m) of pairwise compatible tensors, one per Aut(+)-orbit."""
    n = add.shape[0]
    G = _grid(n)
    if not singles:
        return
    T = np.stack([s[G.orb] for s in singles])  # (K,n,n,n)
    K = len(singles)
    key = {T[i].tobytes(): i for i in range(K)}
    # automorphisms of the (canonical) additive table
    perms = perms_fixing_zero(n)
    auts = [p for p in perms if np.array_equal(p[add], add[np.ix_(p, p)])]
    act = np.empty((len(auts), K), dtype=np.int64)
    for s, p in enumerate(auts):
        inv = np.argsort(p)
        img = p[T[:, inv][:, :, inv][:, :, :, inv]]
        for i in range(K):
            act[s, i] = key[img[i].tobytes()]
    if m == 1:
        for i in range(K):
            if np.all(act[:, i] >= i):
                yield (i,)
        return
    compat = np.ones((K, K), dtype=bool)
    if "T4" in mode:
        heads = [i for i in range(K) if np.all(act[:, i] >= i)]
        # the first label is always orbit-least; later labels need every row
        for i in (heads if m == 2 else range(K)):
            compat[i] = _cross_compatible(T[i], T, G)
            stats["pair_checks"] = stats.get("pair_checks", 0) + K

    def rec(prefix, stab):
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for j in range(K):
            if not all(compat[p, j] for p in prefix):
                continue
            # keep only tuples that are least in their Aut(+)-orbit
            if any(act[s, j] < j for s in stab):
                continue
            new_stab = [s for s in stab if act[s, j] == j]
            yield from rec(prefix + [j], new_stab)

    yield from rec([], list(range(len(auts))))


# ---------------------------------------------------------------------------
# catalogs


@dataclass(frozen=True)
class CatalogEntry:
    canonical: CanonicalForm
    structure: TernaryGammaSemiring
    invariants: tuple
    axiom_mode: str
    branch: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {
            "canonical": self.canonical.hex(),
            "permuted_gamma": self.canonical.permuted_gamma,
            "structure": self.structure.to_dict(),
            "invariants": list(self.invariants),
            "axiom_mode": self.axiom_mode,
            "branch": self.branch,
        }

    @classmethod
    def from_json(cls, d: dict) -> "CatalogEntry":
        ts = TernaryGammaSemiring.from_dict(d["structure"])
        cf = CanonicalForm(bytes.fromhex(d["canonical"]), bool(d.get("permuted_gamma", False)))
        return cls(cf, ts, tuple(d["invariants"]), d["axiom_mode"], d.get("branch", ""))


@dataclass
class Catalog:
    n: int
    m: int
    axiom_mode: str
    permute_gamma: bool = False
    entries: list = field(default_factory=list)
    additive_reducts: int = 0
    stats: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def canonical_set(self) -> set:
        return {e.canonical.data for e in self.entries}

    def header(self) -> dict:
        return {
            "type": "header",
            "tool_version": __version__,
            "n": self.n,
            "m": self.m,
            "axiom_mode": self.axiom_mode,
            "permute_gamma": self.permute_gamma,
            "additive_reducts": self.additive_reducts,
            "count": len(self.entries),
        }

    def dumps(self) -> str:
        lines = [json.dumps(self.header(), sort_keys=True)]
        for e in self.entries:
            lines.append(json.dumps({"type": "entry", **e.to_json()}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.dumps())

    @classmethod
    def read(cls, path) -> "Catalog":
        with open(path, encoding="utf-8") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        if not lines:
            raise ValueError(f"{path}: empty catalog file")
        head = json.loads(lines[0])
        if head.get("type") != "header":
            raise ValueError(f"{path}: first line must be the header")
        cat = cls(head["n"], head["m"], head["axiom_mode"], head.get("permute_gamma", False),
                  additive_reducts=head.get("additive_reducts", 0))
        cat.entries = [CatalogEntry.from_json(json.loads(ln)) for ln in lines[1:]]
        return cat


def default_gamma(m: int) -> list:
    return [str(i + 1) for i in range(m)]


def _entry(ts: TernaryGammaSemiring, mode: AxiomMode, permute_gamma: bool, branch: str) -> CatalogEntry:
    from .radical import invariant_tuple

    cf = canonical_form(ts, permute_gamma)
    rep = cf.structure(ts.n, ts.gamma)
    return CatalogEntry(cf, rep, tuple(invariant_tuple(rep)), mode.name, branch)


def _search_reduct(task):
    """Worker: all families over one additive reduct.  Returns (entries, stats)."""
    r_index, add, m, mode_text, permute_gamma = task
    mode = AxiomMode.parse(mode_text)
    G = _grid(add.shape[0])
    stats = {"nodes": 0}
    singles = single_operations(add, mode, stats)
    stats["single_tensors"] = len(singles)
    gamma = default_gamma(m)
    tensors = [s[G.orb] for s in singles]
    entries = {}
    for fam in _families(singles, m, mode, add, stats, permute_gamma):
        ts = TernaryGammaSemiring(add, np.stack([tensors[i] for i in fam]), gamma)
        e = _entry(ts, mode, permute_gamma, f"r{r_index}." + ".".join(map(str, fam)))
        entries.setdefault(e.canonical.data, e)
    return list(entries.values()), stats


def _check_bounds(n, m, max_order, max_gamma):
    if n < 1 or m < 1:
        raise ValueError("order and gamma size must be positive")
    if n > max_order or n > HARD_MAX_ORDER:
        raise BoundExceeded(f"order {n} exceeds bound {min(max_order, HARD_MAX_ORDER)}")
    if m > max_gamma:
        raise BoundExceeded(f"gamma size {m} exceeds bound {max_gamma}")


def enumerate_structures(
    n: int,
    m: int,
    mode: "AxiomMode | str" = STRICT,
    permute_gamma: bool = False,
    jobs: int = 1,
    max_order: int = DEFAULT_MAX_ORDER,
    max_gamma: int = DEFAULT_MAX_GAMMA,
) -> Catalog:
    """All pairwise non-isomorphic structures of order n with m labels valid under ``mode``."""
    mode = AxiomMode.parse(mode)
    _check_bounds(n, m, max_order, max_gamma)
    if "C" not in mode:
        raise ValueError("enumeration searches symmetric tensors and needs axiom C enabled")
    reducts = enumerate_additive_monoids(n)
    tasks = [(i, add, m, mode.name, permute_gamma) for i, add in enumerate(reducts)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_reduct, tasks))
    else:
        results = [_search_reduct(t) for t in tasks]
    merged = {}
    stats = {"nodes": 0, "pair_checks": 0, "single_tensors": 0}
    for entries, st in results:
        for k in stats:
            stats[k] += st.get(k, 0)
        for e in entries:
            cur = merged.get(e.canonical.data)
            if cur is None or e.branch < cur.branch:
                merged[e.canonical.data] = e
    cat = Catalog(n, m, mode.name, permute_gamma, additive_reducts=len(reducts), stats=stats)
    cat.entries = [merged[k] for k in sorted(merged)]
    log.info("enumerated n=%d m=%d mode=%s: %d structures, %d nodes", n, m, mode.name, len(cat), stats["nodes"])
    return cat


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TGS_JOBS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# unpruned reference


def _batch_valid(add: np.ndarray, T: np.ndarray, mode: AxiomMode) -> np.ndarray:
    """Vectorised axiom predicates for a batch of families T with shape (B,m,n,n,n)."""
    B, m, n = T.shape[0], T.shape[1], T.shape[2]
    ok = np.ones(B, dtype=bool)
    bidx = np.arange(B)
    flat = lambda x: x.reshape(B, -1)  # noqa: E731
    for g in range(m):
        M = T[:, g]
        if "C" in mode:
            for p in itertools.permutations(range(3)):
                ok &= np.all(flat(M == M.transpose((0,) + tuple(q + 1 for q in p))), axis=1)
        if "T3" in mode:
            ok &= np.all(flat(M[:, 0]) == 0, axis=1) & np.all(flat(M[:, :, 0]) == 0, axis=1)
            ok &= np.all(flat(M[:, :, :, 0]) == 0, axis=1)
        if "T2" in mode:
            a, b, c, d = np.meshgrid(*[np.arange(n)] * 4, indexing="ij")
            k = bidx[:, None, None, None, None]
            s = add[a, b]
            for slot in range(3):
                if slot == 0:
                    lhs, x, y = M[k, s, c, d], M[k, a, c, d], M[k, b, c, d]
                elif slot == 1:
                    lhs, x, y = M[k, c, s, d], M[k, c, a, d], M[k, c, b, d]
                else:
                    lhs, x, y = M[k, c, d, s], M[k, c, d, a], M[k, c, d, b]
                ok &= np.all(flat(lhs == add[x, y]), axis=1)
    if "T4" in mode:
        a, b, c, d, e = np.meshgrid(*[np.arange(n)] * 5, indexing="ij")
        k = bidx[:, None, None, None, None, None]
        for al in range(m):
            for be in range(m):
                Ma, Mb = T[:, al], T[:, be]
                lhs = Mb[k, Ma[k, a, b, c], d, e]
                rhs = Ma[k, a, b, Mb[k, c, d, e]]
                ok &= np.all(flat(lhs == rhs), axis=1)
    return ok


def brute_force_catalog(n: int, m: int, mode: "AxiomMode | str" = STRICT, permute_gamma: bool = False,
                        chunk: int = 4096) -> set:
    """Canonical-form set of every valid structure, found with no pruning at all."""
    mode = AxiomMode.parse(mode)
    reps, orb = _orbits(n)
    per_op = n ** len(reps)
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    total = (per_op ** m) * (n ** len(cells))
    if total > ORACLE_BUDGET:
        raise BoundExceeded(f"oracle would test {total} candidates (budget {ORACLE_BUDGET})")
    monoids = []
    for vals in itertools.product(range(n), repeat=len(cells)):
        t = np.zeros((n, n), dtype=np.int64)
        t[0, :] = t[:, 0] = np.arange(n)
        for (a, b), v in zip(cells, vals):
            t[a, b] = t[b, a] = v
        if all(t[t[a, b], c] == t[a, t[b, c]] for a in range(n) for b in range(n) for c in range(n)):
            monoids.append(t)
    # every symmetric tensor, as multiset-value vectors
    allvals = np.array(list(itertools.product(range(n), repeat=len(reps))), dtype=np.int64).reshape(per_op, len(reps))
    tensors = allvals[:, orb]  # (per_op,n,n,n)
    out = set()
    gamma = default_gamma(m)
    for add in monoids:
        for start in range(0, per_op ** m, chunk):
            idx = np.arange(start, min(start + chunk, per_op ** m))
            digits = [(idx // per_op ** g) % per_op for g in range(m)]
            T = np.stack([tensors[dg] for dg in digits], axis=1)
            for i in np.nonzero(_batch_valid(add, T, mode))[0]:
                ts = TernaryGammaSemiring(add, T[i], gamma)
                out.add(canonical_form(ts, permute_gamma).data)
    return out
