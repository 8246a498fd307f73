"""Nilpotent elements, prime ideals, the radical and the invariant fingerprint."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import IdealSet, QuotientError, TernaryGammaSemiring, quotient
from .ideals import LatticeReport, all_congruences, all_ideals


class NilDefinition(str, Enum):
    """Which notion of nilpotency to use.

    ``weak``     some a, b, g, d with {x a b}_g = {a x b}_d = 0.
    ``literal``  a nested chain {..{{x x a1} x a2} .. a_k} reaches 0 for some a_i, g_i.
    ``power``    the same chain with every a_i = x.
    """

    WEAK = "weak"
    LITERAL = "literal"
    POWER = "power"


def _chain_reaches_zero(ts: TernaryGammaSemiring, x: int, free_last: bool) -> bool:
    """BFS over values of the nested left products starting at {x x a}."""
    last = range(ts.n) if free_last else (x,)
    frontier = {int(ts.ops[k, x, x, a]) for k in range(ts.m) for a in last}
    seen = set(frontier)
    while frontier:
        if 0 in frontier:
            return True
        nxt = {int(ts.ops[k, y, x, a]) for y in frontier for k in range(ts.m) for a in last}
        frontier = nxt - seen
        seen |= nxt
    return 0 in seen


def nilpotents(ts: TernaryGammaSemiring, defn: "NilDefinition | str" = NilDefinition.POWER) -> IdealSet:
    defn = NilDefinition(defn)
    out = []
    for x in range(ts.n):
        if defn is NilDefinition.WEAK:
            z1 = (ts.ops[:, x, :, :] == 0).any(axis=0)  # [a, b]: some g with {x a b} = 0
            z2 = (ts.ops[:, :, x, :] == 0).any(axis=0)  # [a, b]: some d with {a x b} = 0
            hit = bool(np.any(z1 & z2))
        else:
            hit = _chain_reaches_zero(ts, x, free_last=defn is NilDefinition.LITERAL)
        if hit:
            out.append(x)
    return IdealSet.of(ts.n, out)


def is_prime(ts: TernaryGammaSemiring, p: IdealSet) -> bool:
    """Proper, and a product inside p forces one of its arguments inside p."""
    if p.is_full():
        return False
    inside = np.zeros(ts.n, dtype=bool)
    inside[list(p.members)] = True
    out = ~inside
    # all three arguments outside, product inside
    bad = inside[ts.ops] & out[None, :, None, None] & out[None, None, :, None] & out[None, None, None, :]
    return not bad.any()


def all_prime_ideals(ts: TernaryGammaSemiring, ideals: LatticeReport | None = None) -> list:
    ideals = ideals or all_ideals(ts)
    return [p for p in ideals.elements if is_prime(ts, p)]


@dataclass
class RadicalResult:
    radical: IdealSet
    primes: list
    semiprime: bool


def radical(ts: TernaryGammaSemiring, ideals: LatticeReport | None = None) -> RadicalResult:
    """Intersection of all prime ideals; the whole carrier when there are none."""
    primes = all_prime_ideals(ts, ideals)
    rad = IdealSet.full(ts.n)
    for p in primes:
        rad = rad & p
    return RadicalResult(rad, primes, rad.mask == 1)


@dataclass
class RadNilReport:
    defn: str
    equal: bool
    radical: IdealSet
    nil: IdealSet
    only_in_radical: tuple
    only_in_nil: tuple

    def to_dict(self) -> dict:
        return {
            "definition": self.defn,
            "equal": self.equal,
            "radical": list(self.radical.members),
            "nil": list(self.nil.members),
            "only_in_radical": list(self.only_in_radical),
            "only_in_nil": list(self.only_in_nil),
        }


def rad_nil_report(ts: TernaryGammaSemiring, defn: "NilDefinition | str" = NilDefinition.POWER) -> RadNilReport:
    rad = radical(ts).radical
    nil = nilpotents(ts, defn)
    a, b = set(rad.members), set(nil.members)
    return RadNilReport(NilDefinition(defn).value, a == b, rad, nil, tuple(sorted(a - b)), tuple(sorted(b - a)))


def cancellation_check(ts: TernaryGammaSemiring) -> dict:
    """Audit of T/Rad(T): cancellation {abc} = {abd} => c = d, and semiprimeness.

    Raises QuotientError when the Bourne relation of the radical is not a congruence.
    """
    rad = radical(ts).radical
    q, proj = quotient(ts, rad)
    wit = None
    n = q.n
    for k, g in enumerate(q.gamma):
        M = q.ops[k]
        for a in range(n):
            for b in range(n):
                row = M[a, b]
                for c in range(n):
                    clash = np.nonzero((row == row[c]) & (np.arange(n) != c))[0]
                    if clash.size:
                        wit = {"gamma": g, "a": a, "b": b, "c": c, "d": int(clash[0]), "value": int(row[c])}
                        break
                if wit:
                    break
            if wit:
                break
        if wit:
            break
    q_rad = radical(q)
    return {
        "radical": list(rad.members),
        "quotient_order": n,
        "projection": list(proj.map),
        "cancellative": wit is None,
        "cancellation_witness": wit,
        "quotient_semiprime": q_rad.semiprime,
        "quotient_radical": list(q_rad.radical.members),
        "quotient_primes": [list(p.members) for p in q_rad.primes],
    }


def find_identities(ts: TernaryGammaSemiring) -> dict:
    """Absorbing zeros, two-sided units, and the idempotence implication audit."""
    n, ops = ts.n, ts.ops
    zeros = []
    for z in range(n):
        if (ops[:, z] == z).all() and (ops[:, :, z] == z).all() and (ops[:, :, :, z] == z).all():
            zeros.append(z)
    units = []
    ar = np.arange(n)
    for e in range(n):
        if all(np.array_equal(ops[k, e, :, e], ar) for k in range(ts.m)):
            units.append(e)
    diag = ops[:, ar, ar, ar]  # (m, n)
    premise = [ts.gamma[k] for k in range(ts.m) if np.array_equal(diag[k], ar)]
    idem_fail = [int(a) for a in ar if ts.add[a, a] != a]
    conclusion = not idem_fail
    return {
        "absorbing_zeros": zeros,
        "units": units,
        "idempotence_implication": {
            "premise_labels": premise,
            "premise": bool(premise),
            "additively_idempotent": conclusion,
            "holds": (not premise) or conclusion,
            "witness": None if (not premise or conclusion) else {"a": idem_fail[0], "a+a": int(ts.add[idem_fail[0], idem_fail[0]])},
        },
    }


def invariant_tuple(ts: TernaryGammaSemiring) -> tuple:
    """(|T|, |Gamma|, #ideals, #congruences, |Rad minus 0|, |Nil_power minus 0|)."""
    ideals = all_ideals(ts)
    cons = all_congruences(ts)
    rad = radical(ts, ideals).radical
    nil = nilpotents(ts, NilDefinition.POWER)
    nonzero = lambda s: len(s) - (1 if 0 in s else 0)  # noqa: E731
    return (ts.n, ts.m, len(ideals), len(cons), nonzero(rad), nonzero(nil))


def radical_report(ts: TernaryGammaSemiring) -> dict:
    ideals = all_ideals(ts)
    res = radical(ts, ideals)
    out = {
        "primes": [p.hex() for p in res.primes],
        "prime_members": [list(p.members) for p in res.primes],
        "radical": res.radical.hex(),
        "radical_members": list(res.radical.members),
        "semiprime": res.semiprime,
        "nil": {d.value: list(nilpotents(ts, d).members) for d in NilDefinition},
        "rad_equals_nil": {d.value: rad_nil_report(ts, d).to_dict() for d in NilDefinition},
        "identities": find_identities(ts),
        "invariants": list(invariant_tuple(ts)),
    }
    try:
        out["cancellation"] = cancellation_check(ts)
    except QuotientError as exc:
        out["cancellation"] = {"error": str(exc), "witness": repr(exc.witness)}
    return out
