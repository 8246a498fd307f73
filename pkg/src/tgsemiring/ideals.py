"""Ideals, congruences and their lattices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    Congruence,
    IdealSet,
    TernaryGammaSemiring,
    compatibility_witness,
    transitive_closure,
)

MAX_CONGRUENCE_ORDER = 6


def ideal_witness(ts: TernaryGammaSemiring, s: IdealSet):
    """Why ``s`` is not an ideal, or None when it is.

    Absorption is tested in every argument position; commutativity of the
    products is not assumed.
    """
    if 0 not in s:
        return ("missing-zero",)
    mem = np.array(s.members)
    inside = np.zeros(ts.n, dtype=bool)
    inside[mem] = True
    sums = ts.add[np.ix_(mem, mem)]
    bad = np.argwhere(~inside[sums])
    if bad.size:
        i, j = bad[0]
        return ("sum", int(mem[i]), int(mem[j]), int(sums[i, j]))
    for k, g in enumerate(ts.gamma):
        M = ts.ops[k]
        for slot, sub in enumerate((M[mem], M[:, mem], M[:, :, mem])):
            bad = np.argwhere(~inside[sub])
            if bad.size:
                idx = [int(v) for v in bad[0]]
                idx[slot] = int(mem[idx[slot]])
                return ("absorb", g, slot, tuple(idx), int(M[tuple(idx)]))
    return None


def is_ideal(ts: TernaryGammaSemiring, s: IdealSet) -> bool:
    return ideal_witness(ts, s) is None


def ideal_generate(ts: TernaryGammaSemiring, elements) -> IdealSet:
    """Least ideal containing the given elements (and 0)."""
    cur = np.zeros(ts.n, dtype=bool)
    cur[0] = True
    for a in elements:
        cur[int(a)] = True
    while True:
        mem = np.nonzero(cur)[0]
        nxt = cur.copy()
        nxt[ts.add[np.ix_(mem, mem)].ravel()] = True
        for M in ts.ops:
            nxt[M[mem].ravel()] = True
            nxt[M[:, mem].ravel()] = True
            nxt[M[:, :, mem].ravel()] = True
        if np.array_equal(nxt, cur):
            return IdealSet.of(ts.n, np.nonzero(cur)[0].tolist())
        cur = nxt


@dataclass
class LatticeReport:
    """A finite lattice given by its elements and join/meet tables (indices into ``elements``)."""

    kind: str
    elements: list
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    is_modular: bool = True
    modular_witness: tuple | None = None
    is_distributive: bool = True
    distributive_witness: tuple | None = None
    notes: list = field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return int(np.nonzero(self.leq.all(axis=1))[0][0])

    @property
    def top(self) -> int:
        return int(np.nonzero(self.leq.all(axis=0))[0][0])

    def covers(self) -> list:
        """Pairs (i, j) with i < j and nothing strictly between."""
        k = len(self.elements)
        lt = self.leq & ~np.eye(k, dtype=bool)
        out = []
        for i in range(k):
            for j in range(k):
                if lt[i, j] and not any(lt[i, x] and lt[x, j] for x in range(k)):
                    out.append((i, j))
        return out

    def element_label(self, i: int) -> str:
        e = self.elements[i]
        return repr(e)

    def to_dict(self) -> dict:
        def enc(e):
            return e.hex() if isinstance(e, IdealSet) else list(e.labels)

        return {
            "kind": self.kind,
            "elements": [enc(e) for e in self.elements],
            "join": self.join.tolist(),
            "meet": self.meet.tolist(),
            "is_modular": self.is_modular,
            "modular_witness": list(self.modular_witness) if self.modular_witness else None,
            "is_distributive": self.is_distributive,
            "distributive_witness": list(self.distributive_witness) if self.distributive_witness else None,
            "shape": lattice_shape(self),
            "notes": self.notes,
        }

    def to_dot(self, name: str = "L") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i in range(len(self.elements)):
            lines.append(f'  n{i} [label="{self.element_label(i)}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _lattice_laws(report: LatticeReport) -> None:
    """Brute-force modularity and distributivity, recording the first failing triple."""
    J, Mt, leq = report.join, report.meet, report.leq
    k = len(report.elements)
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if report.is_modular and leq[x, z] and J[x, Mt[y, z]] != Mt[J[x, y], z]:
                    report.is_modular = False
                    report.modular_witness = (x, y, z)
                if report.is_distributive and Mt[x, J[y, z]] != J[Mt[x, y], Mt[x, z]]:
                    report.is_distributive = False
                    report.distributive_witness = (x, y, z)


def all_ideals(ts: TernaryGammaSemiring) -> LatticeReport:
    """Every ideal (exhaustive over subsets containing 0), ordered by size then bitmask."""
    n = ts.n
    found = []
    for rest in range(1 << (n - 1)):
        s = IdealSet(n, (rest << 1) | 1)
        if is_ideal(ts, s):
            found.append(s)
    found.sort(key=lambda s: (len(s), s.mask))
    pos = {s.mask: i for i, s in enumerate(found)}
    k = len(found)
    leq = np.array([[a.issubset(b) for b in found] for a in found], dtype=bool)
    meet = np.empty((k, k), dtype=np.int64)
    join = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(found):
        for j, b in enumerate(found):
            meet[i, j] = pos[(a & b).mask]
            join[i, j] = pos[ideal_generate(ts, (a | b).members).mask]
    rep = LatticeReport("ideal", found, leq, join, meet)
    _lattice_laws(rep)
    return rep


def set_partitions(n: int):
    """Restricted growth strings of length n (every partition of 0..n-1 exactly once)."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(rgs)
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from rec(i + 1, max(top, v))

    rgs[0] = 0
    yield from rec(1, 0)


def all_congruences(ts: TernaryGammaSemiring, max_order: int = MAX_CONGRUENCE_ORDER) -> LatticeReport:
    """Every partition compatible with + and all ternary products, with join and meet."""
    n = ts.n
    if n > max_order:
        raise ValueError(f"order {n} exceeds congruence enumeration bound {max_order}")
    found = []
    for rgs in set_partitions(n):
        rho = Congruence.from_labels(rgs)
        if compatibility_witness(ts, rho) is None:
            found.append(rho)
    found.sort(key=lambda r: (-len(set(r.labels)), r.labels))
    pos = {r.labels: i for i, r in enumerate(found)}
    k = len(found)
    leq = np.array([[a.refines(b) for b in found] for a in found], dtype=bool)
    meet = np.empty((k, k), dtype=np.int64)
    join = np.empty((k, k), dtype=np.int64)
    notes = []
    for i, a in enumerate(found):
        for j, b in enumerate(found):
            meet[i, j] = pos[a.meet(b).labels]
            pairs = [(x, a.labels[x]) for x in range(n)] + [(x, b.labels[x]) for x in range(n)]
            closed = transitive_closure(n, pairs)
            if closed.labels in pos:
                join[i, j] = pos[closed.labels]
            else:
                # least compatible partition above both: meet of every upper bound
                ups = [u for u in range(k) if leq[i, u] and leq[j, u]]
                best = ups[0]
                for u in ups[1:]:
                    best = pos[found[best].meet(found[u]).labels]
                join[i, j] = best
                notes.append(f"join of {a!r} and {b!r} needed upward search")
    rep = LatticeReport("congruence", found, leq, join, meet, notes=notes)
    _lattice_laws(rep)
    return rep


def lattice_shape(rep: LatticeReport) -> str:
    """Coarse shape label: trivial, chain-k, boolean-2x2, diamond-M3, modular-nondistributive, distributive, other."""
    k = len(rep)
    leq = rep.leq
    if k == 1:
        return "trivial"
    comparable = leq | leq.T
    if comparable.all():
        return f"chain-{k}"
    atoms = [j for (i, j) in rep.covers() if i == rep.bottom]
    if k == 4 and len(atoms) == 2:
        return "boolean-2x2"
    if k == 5 and len(atoms) == 3 and all(rep.join[x, y] == rep.top for x in atoms for y in atoms if x != y):
        return "diamond-M3"
    if rep.is_modular and not rep.is_distributive:
        return "modular-nondistributive"
    if rep.is_distributive:
        return "distributive"
    return "other"


# ---------------------------------------------------------------------------
# ideal -> relation audit


def rho_of_ideal(ts: TernaryGammaSemiring, ideal: IdealSet) -> np.ndarray:
    """Boolean matrix R with R[a,b] iff {a b c}_g lies in the ideal for every c and g."""
    inside = np.zeros(ts.n, dtype=bool)
    inside[list(ideal.members)] = True
    return inside[ts.ops].all(axis=(0, 3))


def _relation_props(R: np.ndarray) -> dict:
    n = R.shape[0]
    out = {}
    bad = [a for a in range(n) if not R[a, a]]
    out["reflexive"] = (not bad, (bad[0], bad[0]) if bad else None)
    bad = np.argwhere(R & ~R.T)
    out["symmetric"] = (bad.size == 0, tuple(int(v) for v in bad[0]) if bad.size else None)
    comp = (R.astype(np.int64) @ R.astype(np.int64)) > 0
    bad = np.argwhere(comp & ~R)
    wit = None
    if bad.size:
        a, c = (int(v) for v in bad[0])
        b = int(np.nonzero(R[a] & R[:, c])[0][0])
        wit = (a, b, c)
    out["transitive"] = (bad.size == 0, wit)
    return out


def _relation_of(rho: Congruence) -> np.ndarray:
    lab = np.asarray(rho.labels)
    return lab[:, None] == lab[None, :]


@dataclass
class CorrespondenceReport:
    ideals: list
    rows: list
    injective: bool
    injective_witness: tuple | None
    order_reversing: bool
    order_witness: tuple | None
    surjective: bool
    missed_congruences: list
    claim: str = "I -> rho_I is a bijective order-reversing map from ideals onto congruences"

    @property
    def verified(self) -> bool:
        return self.injective and self.order_reversing and self.surjective and all(r["congruence"] for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "verified": self.verified,
            "rows": self.rows,
            "injective": self.injective,
            "injective_witness": self.injective_witness,
            "order_reversing": self.order_reversing,
            "order_witness": self.order_witness,
            "surjective": self.surjective,
            "missed_congruences": self.missed_congruences,
        }


def correspondence_report(ts: TernaryGammaSemiring, ideals: LatticeReport | None = None,
                          congruences: LatticeReport | None = None) -> CorrespondenceReport:
    """Build rho_I for every ideal exactly as defined and audit each claimed property."""
    ideals = ideals or all_ideals(ts)
    congruences = congruences or all_congruences(ts)
    rels = []
    rows = []
    for I in ideals.elements:
        R = rho_of_ideal(ts, I)
        rels.append(R)
        props = _relation_props(R)
        equiv = all(v[0] for v in props.values())
        row = {
            "ideal": I.hex(),
            "members": list(I.members),
            "pairs": [[int(a), int(b)] for a, b in np.argwhere(R)],
            **{k: {"holds": v[0], "witness": v[1]} for k, v in props.items()},
            "congruence": False,
            "compatibility_witness": None,
        }
        if equiv:
            rho = Congruence.from_labels([int(np.nonzero(R[a])[0][0]) for a in range(ts.n)])
            wit = compatibility_witness(ts, rho)
            row["congruence"] = wit is None
            row["compatibility_witness"] = None if wit is None else [wit[0], list(wit[1]), list(wit[2]), wit[3], wit[4]]
        rows.append(row)
    k = len(rels)
    inj_w = next(((ideals.elements[i].hex(), ideals.elements[j].hex())
                  for i in range(k) for j in range(i + 1, k) if np.array_equal(rels[i], rels[j])), None)
    ord_w = next(((ideals.elements[i].hex(), ideals.elements[j].hex())
                  for i in range(k) for j in range(k)
                  if i != j and ideals.leq[i, j] and not np.all(rels[j] <= rels[i])), None)
    missed = [list(c.labels) for c in congruences.elements
              if not any(np.array_equal(_relation_of(c), R) for R in rels)]
    return CorrespondenceReport(
        ideals=[I.hex() for I in ideals.elements],
        rows=rows,
        injective=inj_w is None,
        injective_witness=inj_w,
        order_reversing=ord_w is None,
        order_witness=ord_w,
        surjective=not missed,
        missed_congruences=missed,
    )
