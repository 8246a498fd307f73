"""Fuzzy ideals with rational grades and their level cuts."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..core import IdealSet, TernaryGammaSemiring
from ..ideals import ideal_witness


def _grades(ts: TernaryGammaSemiring, mu) -> list:
    grades = [Fraction(g) for g in mu]
    if len(grades) != ts.n:
        raise ValueError(f"need {ts.n} grades, got {len(grades)}")
    for a, g in enumerate(grades):
        if not 0 <= g <= 1:
            raise ValueError(f"grade of {a} is {g}, outside [0, 1]")
    return grades


def fuzzy_witness(ts: TernaryGammaSemiring, grades: list):
    """First violation of mu(a+b) >= min(mu a, mu b) or mu(product) >= mu of any argument."""
    n = ts.n
    for a in range(n):
        for b in range(n):
            s = int(ts.add[a, b])
            if grades[s] < min(grades[a], grades[b]):
                return {"rule": "sum", "a": a, "b": b, "value": s}
    for k, g in enumerate(ts.gamma):
        M = ts.ops[k]
        for pos in range(3):
            for x, y, z in np.ndindex(M.shape):
                arg = (x, y, z)[pos]
                v = int(M[x, y, z])
                if grades[v] < grades[arg]:
                    return {"rule": "product", "gamma": g, "position": pos, "args": [x, y, z], "value": v}
    return None


def level_cut(grades: list, alpha) -> tuple:
    return tuple(a for a, g in enumerate(grades) if g >= alpha)


def fuzzy_ideal_check(ts: TernaryGammaSemiring, mu) -> dict:
    """Check the fuzzy ideal conditions and that every nonempty level cut is an ideal."""
    grades = _grades(ts, mu)
    wit = fuzzy_witness(ts, grades)
    cuts = []
    for alpha in sorted(set(grades), reverse=True):
        members = level_cut(grades, alpha)
        w = ideal_witness(ts, IdealSet.of(ts.n, members))
        cuts.append({"alpha": str(alpha), "cut": list(members), "ideal": w is None, "witness": w})
    return {
        "grades": [str(g) for g in grades],
        "fuzzy_ideal": wit is None,
        "witness": wit,
        "cuts": cuts,
        "cuts_are_ideals": all(c["ideal"] for c in cuts),
    }


def fuzzy_from_chain(ts: TernaryGammaSemiring, chain) -> dict:
    """Grades mu(a) = max{alpha : a in I_alpha} from (alpha, ideal) pairs forming a chain.

    Larger grades must index smaller ideals.  Elements in no ideal get grade 0,
    so the cut at grade 0 is always T and a chain entry at 0 round-trips only if it is T.
    """
    pairs = sorted(((Fraction(a), tuple(sorted(I))) for a, I in chain), key=lambda p: p[0], reverse=True)
    for alpha, I in pairs:
        if not 0 <= alpha <= 1:
            raise ValueError(f"grade {alpha} outside [0, 1]")
    for (a1, I1), (a2, I2) in zip(pairs, pairs[1:]):
        if not set(I1) <= set(I2):
            raise ValueError(f"not a chain: ideal at {a1} is not inside ideal at {a2}")
    grades = [Fraction(0)] * ts.n
    for alpha, I in reversed(pairs):
        for a in I:
            grades[a] = alpha
    report = fuzzy_ideal_check(ts, grades)
    report["round_trip"] = all(level_cut(grades, alpha) == I for alpha, I in pairs)
    return report
