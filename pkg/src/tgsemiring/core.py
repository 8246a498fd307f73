"""Finite commutative ternary Gamma-semirings as explicit operation tables.

A structure on the carrier ``0..n-1`` consists of a binary addition table and,
for every parameter label, a ternary product tensor.  Element 0 is always the
additive identity.  Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

AXIOMS = ("T1", "T2", "T3", "T4", "C")

# the five non-identity permutations of three arguments
_PERMS3 = [p for p in itertools.permutations(range(3)) if p != (0, 1, 2)]


class StructureError(ValueError):
    """Malformed tables or arguments outside the carrier."""


class QuotientError(ValueError):
    """The relation used for a quotient is not compatible with the operations."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


class TernaryGammaSemiring:
    """Carrier size, addition table and one ternary tensor per label.

    ``ops[k, a, b, c]`` is ``{a b c}`` for the k-th label in ``gamma``.
    Instances are immutable and hash by their tables.
    """

    __slots__ = ("n", "gamma", "add", "ops", "_index", "_key")

    def __init__(self, add, ops, gamma: Sequence[str] | None = None):
        add = np.asarray(add, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape[0] < 1:
            raise StructureError(f"addition table must be n x n with n >= 1, got shape {add.shape}")
        n = add.shape[0]
        if isinstance(ops, Mapping):
            gamma = list(ops) if gamma is None else list(gamma)
            ops = [ops[g] for g in gamma]
        ops = np.asarray(ops, dtype=np.int64)
        if ops.ndim == 3:
            ops = ops[None]
        if ops.ndim == 2 and ops.shape[1] == n ** 3:
            ops = ops.reshape(-1, n, n, n)
        if ops.ndim != 4 or ops.shape[1:] != (n, n, n) or ops.shape[0] < 1:
            raise StructureError(f"ternary tensors must have shape (m, {n}, {n}, {n}), got {ops.shape}")
        m = ops.shape[0]
        if gamma is None:
            gamma = [str(i + 1) for i in range(m)]
        gamma = tuple(str(g) for g in gamma)
        if len(gamma) != m or len(set(gamma)) != m:
            raise StructureError(f"need {m} distinct labels, got {gamma!r}")
        if add.min() < 0 or add.max() >= n or ops.min() < 0 or ops.max() >= n:
            raise StructureError("table entry outside 0..n-1")
        if not np.array_equal(add[0], np.arange(n)):
            raise StructureError("element 0 must be the additive identity (add[0][a] = a)")
        self.n = n
        self.gamma = gamma
        self.add = _frozen(add)
        self.ops = _frozen(ops)
        self._index = {g: i for i, g in enumerate(gamma)}
        self._key = (gamma, self.add.tobytes(), self.ops.tobytes())

    @property
    def m(self) -> int:
        return len(self.gamma)

    def gamma_index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise StructureError(f"unknown parameter label {label!r}; known: {list(self.gamma)}") from None

    def op(self, label) -> np.ndarray:
        return self.ops[self.gamma_index(label)]

    def elements(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, TernaryGammaSemiring) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"TernaryGammaSemiring(n={self.n}, gamma={list(self.gamma)})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": list(self.gamma),
            "add": self.add.tolist(),
            "ops": {g: self.ops[i].reshape(-1).tolist() for i, g in enumerate(self.gamma)},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TernaryGammaSemiring":
        try:
            n = int(data["n"])
            gamma = [str(g) for g in data["gamma"]]
            add = data["add"]
            ops = data["ops"]
        except (KeyError, TypeError, ValueError) as exc:
            raise StructureError(f"missing or invalid field: {exc}") from None
        if not isinstance(ops, Mapping) or set(ops) != set(gamma):
            raise StructureError("'ops' must map exactly the labels listed in 'gamma'")
        flat = []
        for g in gamma:
            row = ops[g]
            if not isinstance(row, list) or len(row) != n ** 3:
                raise StructureError(f"ops[{g!r}] must be a list of {n ** 3} integers")
            flat.append(row)
        if not isinstance(add, list) or len(add) != n or any(not isinstance(r, list) or len(r) != n for r in add):
            raise StructureError(f"'add' must be a {n}x{n} list of lists")
        try:
            return cls(np.array(add, dtype=np.int64), np.array(flat, dtype=np.int64).reshape(len(gamma), n, n, n), gamma)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, StructureError):
                raise
            raise StructureError(str(exc)) from None

    def relabel(self, perm: Sequence[int]) -> "TernaryGammaSemiring":
        """Image under the bijection ``a -> perm[a]`` (``perm[0]`` must be 0)."""
        perm = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(self.n)
        add = perm[self.add[np.ix_(inv, inv)]]
        ops = perm[self.ops[:, inv][:, :, inv][:, :, :, inv]]
        return TernaryGammaSemiring(add, ops, self.gamma)

    def restrict(self, elements: Iterable[int]) -> "TernaryGammaSemiring":
        """Substructure on a subset containing 0 that is closed under all operations."""
        elems = sorted(set(int(e) for e in elements))
        if not elems or elems[0] != 0:
            raise StructureError("a substructure must contain 0")
        pos = {e: i for i, e in enumerate(elems)}
        idx = np.array(elems)
        sub_add = self.add[np.ix_(idx, idx)]
        sub_ops = self.ops[:, idx][:, :, idx][:, :, :, idx]
        try:
            add = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub_add)
            ops = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub_ops)
        except KeyError as exc:
            raise StructureError(f"subset not closed: produces {exc.args[0]}") from None
        return TernaryGammaSemiring(add, ops, self.gamma)


def load_structure(path) -> TernaryGammaSemiring:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StructureError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise StructureError("top-level JSON value must be an object")
    return TernaryGammaSemiring.from_dict(data)


def dump_structure(ts: TernaryGammaSemiring, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(ts.to_dict(), fh)
        fh.write("\n")


def evaluate(ts: TernaryGammaSemiring, gamma, a: int, b: int, c: int) -> int:
    k = ts.gamma_index(gamma)
    for x in (a, b, c):
        if not 0 <= x < ts.n:
            raise StructureError(f"element {x} outside carrier 0..{ts.n - 1}")
    return int(ts.ops[k, a, b, c])


# ---------------------------------------------------------------------------
# axiom checking


@dataclass(frozen=True)
class AxiomMode:
    enabled: frozenset

    def __post_init__(self):
        bad = set(self.enabled) - set(AXIOMS)
        if bad:
            raise ValueError(f"unknown axioms {sorted(bad)}")
        if "T1" not in self.enabled:
            raise ValueError("T1 (commutative monoid reduct) cannot be disabled")

    @classmethod
    def parse(cls, text: "str | AxiomMode") -> "AxiomMode":
        if isinstance(text, AxiomMode):
            return text
        key = text.strip().lower()
        if key == "strict":
            return STRICT
        if key == "relaxed":
            return RELAXED
        parts = {p.strip().upper() for p in text.split(",") if p.strip()}
        return cls(frozenset(parts))

    @property
    def name(self) -> str:
        if self.enabled == STRICT.enabled:
            return "strict"
        if self.enabled == RELAXED.enabled:
            return "relaxed"
        return ",".join(a for a in AXIOMS if a in self.enabled)

    def __contains__(self, axiom) -> bool:
        return axiom in self.enabled

    def __str__(self):
        return self.name


STRICT = AxiomMode(frozenset(AXIOMS))
RELAXED = AxiomMode(frozenset(AXIOMS) - {"T3"})


@dataclass(frozen=True)
class Witness:
    """One violated instance: which check, the labels and elements fed to it, both sides."""

    axiom: str
    check: str
    gammas: tuple
    elements: tuple
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "check": self.check,
            "gammas": list(self.gammas),
            "elements": list(self.elements),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    violations: int = 0
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "status": "pass" if self.passed else "fail",
            "violations": self.violations,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass
class AxiomReport:
    mode: AxiomMode
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def failed(self) -> list:
        return [r.axiom for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {"mode": self.mode.name, "passed": self.passed, "results": [r.to_dict() for r in self.results]}


def _grid(*sizes):
    return np.meshgrid(*[np.arange(s) for s in sizes], indexing="ij")


def _t2_sides(add, ops, slot):
    m, n = ops.shape[0], add.shape[0]
    g, a, b, c, d = _grid(m, n, n, n, n)
    s = add[a, b]
    if slot == 0:
        lhs = ops[g, s, c, d]
        rhs = add[ops[g, a, c, d], ops[g, b, c, d]]
    elif slot == 1:
        lhs = ops[g, c, s, d]
        rhs = add[ops[g, c, a, d], ops[g, c, b, d]]
    else:
        lhs = ops[g, c, d, s]
        rhs = add[ops[g, c, d, a], ops[g, c, d, b]]
    return lhs, rhs


def _t3_sides(ops, slot):
    m, n = ops.shape[0], ops.shape[1]
    g, a, b = _grid(m, n, n)
    zero = np.zeros_like(a)
    args = [[zero, a, b], [a, zero, b], [a, b, zero]][slot]
    return ops[g, args[0], args[1], args[2]], zero


def _t4_sides(ops):
    m, n = ops.shape[0], ops.shape[1]
    al, be, a, b, c, d, e = _grid(m, m, n, n, n, n, n)
    lhs = ops[be, ops[al, a, b, c], d, e]
    rhs = ops[al, a, b, ops[be, c, d, e]]
    return lhs, rhs


def _collect(axiom, check, lhs, rhs, limit, to_witness):
    bad = lhs != rhs
    count = int(bad.sum())
    wits = []
    if count and limit > 0:
        for idx in np.argwhere(bad)[:limit]:
            idx = tuple(int(i) for i in idx)
            wits.append(to_witness(check, idx, int(lhs[idx]), int(rhs[idx])))
    return count, wits


def check_axioms(ts: TernaryGammaSemiring, mode: "AxiomMode | str" = "strict", max_witnesses: int = 10) -> AxiomReport:
    """Exhaustively test every enabled axiom; keep up to ``max_witnesses`` witnesses per axiom."""
    mode = AxiomMode.parse(mode)
    n, add, ops, gam = ts.n, ts.add, ts.ops, ts.gamma
    results = []
    for axiom in AXIOMS:
        if axiom not in mode:
            continue
        total, wits = 0, []

        def take(check, lhs, rhs, mk):
            nonlocal total
            cnt, w = _collect(axiom, check, lhs, rhs, max_witnesses - len(wits), mk)
            total += cnt
            wits.extend(w)

        if axiom == "T1":
            a, b, c = _grid(n, n, n)
            take("associativity", add[add[a, b], c], add[a, add[b, c]],
                 lambda ch, i, l, r: Witness("T1", ch, (), i, l, r))
            a, b = _grid(n, n)
            take("commutativity", add[a, b], add[b, a], lambda ch, i, l, r: Witness("T1", ch, (), i, l, r))
            ar = np.arange(n)
            take("identity", add[ar, 0], ar, lambda ch, i, l, r: Witness("T1", ch, (), i, l, r))
        elif axiom == "T2":
            for slot in range(3):
                lhs, rhs = _t2_sides(add, ops, slot)
                take(f"slot{slot}", lhs, rhs,
                     lambda ch, i, l, r: Witness("T2", ch, (gam[i[0]],), i[1:], l, r))
        elif axiom == "T3":
            for slot in range(3):
                lhs, rhs = _t3_sides(ops, slot)
                take(f"slot{slot}", lhs, rhs,
                     lambda ch, i, l, r: Witness("T3", ch, (gam[i[0]],), i[1:], l, r))
        elif axiom == "T4":
            lhs, rhs = _t4_sides(ops)
            take("associativity", lhs, rhs,
                 lambda ch, i, l, r: Witness("T4", ch, (gam[i[0]], gam[i[1]]), i[2:], l, r))
        else:
            g, a, b, c = _grid(ts.m, n, n, n)
            base = [a, b, c]
            for p in _PERMS3:
                take("perm" + "".join(map(str, p)), ops[g, a, b, c], ops[g, base[p[0]], base[p[1]], base[p[2]]],
                     lambda ch, i, l, r: Witness("C", ch, (gam[i[0]],), i[1:], l, r))
        results.append(AxiomResult(axiom, total == 0, total, wits))
    return AxiomReport(mode, results)


def witness_values(ts: TernaryGammaSemiring, w: Witness) -> tuple:
    """Recompute ``(lhs, rhs)`` of a witness directly from the tables."""
    add = ts.add
    ev = lambda g, x, y, z: int(ts.ops[ts.gamma_index(g), x, y, z])  # noqa: E731
    e = w.elements
    if w.axiom == "T1":
        if w.check == "associativity":
            a, b, c = e
            return int(add[add[a, b], c]), int(add[a, add[b, c]])
        if w.check == "commutativity":
            a, b = e
            return int(add[a, b]), int(add[b, a])
        (a,) = e
        return int(add[a, 0]), a
    if w.axiom == "T2":
        (g,) = w.gammas
        a, b, c, d = e
        s = int(add[a, b])
        slot = int(w.check[-1])
        place = lambda x: [(x, c, d), (c, x, d), (c, d, x)][slot]  # noqa: E731
        return ev(g, *place(s)), int(add[ev(g, *place(a)), ev(g, *place(b))])
    if w.axiom == "T3":
        (g,) = w.gammas
        a, b = e
        slot = int(w.check[-1])
        args = [(0, a, b), (a, 0, b), (a, b, 0)][slot]
        return ev(g, *args), 0
    if w.axiom == "T4":
        al, be = w.gammas
        a, b, c, d, x = e
        return ev(be, ev(al, a, b, c), d, x), ev(al, a, b, ev(be, c, d, x))
    (g,) = w.gammas
    p = tuple(int(ch) for ch in w.check[4:])
    return ev(g, *e), ev(g, *(e[i] for i in p))


# ---------------------------------------------------------------------------
# named constructions

NAMED_KINDS = ("modular", "truncated_sum", "max_op", "boolean_table2", "boolean_and_or", "zero_op")


def additive_table(kind: str, n: int) -> np.ndarray:
    a, b = _grid(n, n)
    if kind == "mod":
        return (a + b) % n
    if kind in ("max", "or"):
        return np.maximum(a, b)
    if kind == "truncated":
        return np.minimum(a + b, n - 1)
    raise StructureError(f"unknown additive kind {kind!r} (mod, max, or, truncated)")


def _ternary_formula(kind: str, n: int) -> np.ndarray:
    a, b, c = _grid(n, n, n)
    if kind == "mod":
        return (a + b + c) % n
    if kind == "sum":
        return np.minimum(a + b + c, n - 1)
    if kind == "max":
        return np.maximum(np.maximum(a, b), c)
    if kind == "min":
        return np.minimum(np.minimum(a, b), c)
    if kind == "majority":
        return ((a + b + c) >= 2).astype(np.int64)
    if kind == "zero":
        return np.zeros((n, n, n), dtype=np.int64)
    raise StructureError(f"unknown ternary formula {kind!r}")


def build_named(kind: str, n: int, params: Mapping | None = None) -> TernaryGammaSemiring:
    """Build a structure straight from a formula or table; no axiom checking.

    ``modular``         add mod n, ``{abc} = (a+b+c) mod n``.
    ``truncated_sum``   add ``min(a+b, n-1)``; ``params["ops"]`` lists formulas
                        per label (default ``["sum"]``: ``min(a+b+c, n-1)``).
                        ``{"ops": ["sum", "max"], "gamma": ["alpha", "beta"]}`` at
                        n=4 is the two-operation truncated example.
    ``max_op``          ``{abc} = max(a,b,c)``; ``params["add"]`` picks the reduct
                        (default ``max``).
    ``boolean_table2``  n=2, OR addition, ``{abc} = 1`` iff at least two arguments are 1.
    ``boolean_and_or``  n=2, OR addition, ``{abc} = min(a,b,c)``.
    ``zero_op``         constant-zero tensors over ``params["add"]`` (default ``mod``),
                        ``params["m"]`` labels.
    """
    params = dict(params or {})
    if kind not in NAMED_KINDS:
        raise StructureError(f"unsupported kind {kind!r}; choose from {NAMED_KINDS}")
    if n < 1:
        raise StructureError("n must be positive")
    if kind == "modular":
        add, formulas = additive_table("mod", n), params.get("ops", ["mod"])
    elif kind == "truncated_sum":
        add, formulas = additive_table("truncated", n), params.get("ops", ["sum"])
    elif kind == "max_op":
        add, formulas = additive_table(params.get("add", "max"), n), params.get("ops", ["max"])
    elif kind in ("boolean_table2", "boolean_and_or"):
        if n != 2:
            raise StructureError(f"{kind} exists only for n = 2")
        add = additive_table("or", 2)
        formulas = ["majority"] if kind == "boolean_table2" else ["min"]
    else:
        add = additive_table(params.get("add", "mod"), n)
        formulas = ["zero"] * int(params.get("m", 1))
    gamma = params.get("gamma")
    ops = np.stack([_ternary_formula(f, n) for f in formulas])
    return TernaryGammaSemiring(add, ops, gamma)


def direct_product(ts1: TernaryGammaSemiring, ts2: TernaryGammaSemiring) -> TernaryGammaSemiring:
    """Componentwise product; the pair (x, y) is encoded as ``x * n2 + y``."""
    if ts1.gamma != ts2.gamma:
        raise StructureError(f"parameter labels differ: {ts1.gamma} vs {ts2.gamma}")
    n1, n2 = ts1.n, ts2.n
    enc = lambda x, y: x * n2 + y  # noqa: E731
    x1, y1, x2, y2 = _grid(n1, n2, n1, n2)
    add = enc(ts1.add[x1, x2], ts2.add[y1, y2]).reshape(n1 * n2, n1 * n2)
    g, xa, ya, xb, yb, xc, yc = _grid(ts1.m, n1, n2, n1, n2, n1, n2)
    ops = enc(ts1.ops[g, xa, xb, xc], ts2.ops[g, ya, yb, yc]).reshape(ts1.m, n1 * n2, n1 * n2, n1 * n2)
    return TernaryGammaSemiring(add, ops, ts1.gamma)


# ---------------------------------------------------------------------------
# subsets, partitions, homomorphisms, quotients


@dataclass(frozen=True, order=True)
class IdealSet:
    """A subset of the carrier held as a bitmask (bit a set iff a is a member)."""

    n: int
    mask: int

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "IdealSet":
        mask = 0
        for a in members:
            if not 0 <= a < n:
                raise StructureError(f"element {a} outside carrier 0..{n - 1}")
            mask |= 1 << a
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "IdealSet":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple:
        return tuple(a for a in range(self.n) if self.mask >> a & 1)

    def __contains__(self, a) -> bool:
        return bool(self.mask >> a & 1)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return bin(self.mask).count("1")

    def issubset(self, other: "IdealSet") -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other):
        return IdealSet(self.n, self.mask & other.mask)

    def __or__(self, other):
        return IdealSet(self.n, self.mask | other.mask)

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def hex(self) -> str:
        return format(self.mask, "#x")

    def __repr__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class Congruence:
    """Partition of the carrier; ``labels[a]`` is the least element of a's block."""

    labels: tuple

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels = list(range(n))
        seen = set()
        for blk in blocks:
            blk = sorted(blk)
            for a in blk:
                if a in seen:
                    raise StructureError(f"element {a} in two blocks")
                seen.add(a)
                labels[a] = blk[0]
        return cls(tuple(labels))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        """Normalise any block-id array to minimal representatives."""
        first = {}
        return cls(tuple(first.setdefault(lab, a) for a, lab in enumerate(labels)))

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    def blocks(self) -> list:
        out = {}
        for a, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(a)
        return [tuple(b) for _, b in sorted(out.items())]

    def relates(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def is_identity(self) -> bool:
        return all(lab == a for a, lab in enumerate(self.labels))

    def is_full(self) -> bool:
        return all(lab == 0 for lab in self.labels)

    def refines(self, other: "Congruence") -> bool:
        """True when self is contained in other as a relation."""
        return all(other.labels[a] == other.labels[lab] for a, lab in enumerate(self.labels))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels([(x, y) for x, y in zip(self.labels, other.labels)])

    def __repr__(self):
        return "|".join("".join(map(str, b)) if len(b) > 0 else "" for b in self.blocks())


def transitive_closure(n: int, pairs: Iterable[tuple]) -> Congruence:
    """Smallest equivalence relation containing the given pairs (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return Congruence.from_labels([find(a) for a in range(n)])


def compatibility_witness(ts: TernaryGammaSemiring, rho: Congruence):
    """First failure of compatibility of ``rho`` with + or a ternary op, else None.

    Compatibility with each operation is checked one argument at a time, which is
    equivalent to the all-arguments-at-once form for an equivalence relation.
    """
    lab = np.asarray(rho.labels)
    n = ts.n
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if lab[a] == lab[b]]
    for a, b in pairs:
        ra, rb = lab[ts.add[a]], lab[ts.add[b]]
        bad = np.nonzero(ra != rb)[0]
        if bad.size:
            c = int(bad[0])
            return ("+", (a, b), (c,), int(ts.add[a, c]), int(ts.add[b, c]))
        for k, g in enumerate(ts.gamma):
            for slot in range(3):
                ta = np.moveaxis(ts.ops[k], slot, 0)
                diff = lab[ta[a]] != lab[ta[b]]
                if diff.any():
                    y, z = (int(v) for v in np.argwhere(diff)[0])
                    return (g, (a, b), (slot, y, z), int(ta[a, y, z]), int(ta[b, y, z]))
    return None


def is_congruence(ts: TernaryGammaSemiring, rho: Congruence) -> bool:
    return compatibility_witness(ts, rho) is None


def bourne_congruence(ts: TernaryGammaSemiring, ideal: IdealSet) -> Congruence:
    """Transitive closure of ``a ~ b iff a + i = b + j`` for some i, j in the ideal."""
    mem = list(ideal.members)
    n = ts.n
    pairs = []
    for a in range(n):
        sa = {int(ts.add[a, i]) for i in mem}
        for b in range(a + 1, n):
            if any(int(ts.add[b, j]) in sa for j in mem):
                pairs.append((a, b))
    return transitive_closure(n, pairs)


@dataclass(frozen=True)
class Homomorphism:
    source: TernaryGammaSemiring
    target: TernaryGammaSemiring
    map: tuple

    def __call__(self, a: int) -> int:
        return self.map[a]


@dataclass
class HomomorphismCheck:
    ok: bool
    witness: tuple | None = None
    kernel: IdealSet | None = None

    def __bool__(self):
        return self.ok


def is_homomorphism(ts1: TernaryGammaSemiring, ts2: TernaryGammaSemiring, fmap: Sequence[int]) -> HomomorphismCheck:
    """Exhaustively test that ``fmap`` preserves 0, + and every ternary product."""
    f = np.asarray(fmap, dtype=np.int64)
    if f.shape != (ts1.n,) or f.min(initial=0) < 0 or f.max(initial=0) >= ts2.n:
        raise StructureError("map must send every source element into the target carrier")
    if ts1.gamma != ts2.gamma:
        raise StructureError("parameter labels differ")
    if f[0] != 0:
        return HomomorphismCheck(False, ("zero", (0,), int(f[0]), 0))
    a, b = _grid(ts1.n, ts1.n)
    lhs, rhs = f[ts1.add[a, b]], ts2.add[f[a], f[b]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        x, y = (int(v) for v in bad[0])
        return HomomorphismCheck(False, ("+", (x, y), int(lhs[x, y]), int(rhs[x, y])))
    g, a, b, c = _grid(ts1.m, ts1.n, ts1.n, ts1.n)
    lhs, rhs = f[ts1.ops[g, a, b, c]], ts2.ops[g, f[a], f[b], f[c]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        k, x, y, z = (int(v) for v in bad[0])
        return HomomorphismCheck(False, (ts1.gamma[k], (x, y, z), int(lhs[k, x, y, z]), int(rhs[k, x, y, z])))
    kernel = IdealSet.of(ts1.n, np.nonzero(f == 0)[0].tolist())
    return HomomorphismCheck(True, None, kernel)


def quotient(ts: TernaryGammaSemiring, by: "Congruence | IdealSet"):
    """Quotient by a congruence, or by an ideal through its Bourne congruence.

    Blocks are numbered by increasing least member, so the block of 0 is 0.
    Returns ``(quotient_structure, projection)``; raises QuotientError with a
    witness when the induced operations would be ill-defined.
    """
    if isinstance(by, IdealSet):
        rho = bourne_congruence(ts, by)
    elif isinstance(by, Congruence):
        rho = by
    else:
        raise TypeError("quotient needs a Congruence or an IdealSet")
    if rho.n != ts.n:
        raise StructureError("relation lives on a different carrier")
    wit = compatibility_witness(ts, rho)
    if wit is not None:
        raise QuotientError(f"relation is not compatible with operation {wit[0]!r}: pair {wit[1]}", wit)
    reps = sorted(set(rho.labels))
    block_of = {r: i for i, r in enumerate(reps)}
    proj = np.array([block_of[lab] for lab in rho.labels], dtype=np.int64)
    r = np.array(reps, dtype=np.int64)
    add = proj[ts.add[np.ix_(r, r)]]
    ops = proj[ts.ops[:, r][:, :, r][:, :, :, r]]
    q = TernaryGammaSemiring(add, ops, ts.gamma)
    return q, Homomorphism(ts, q, tuple(int(x) for x in proj))
