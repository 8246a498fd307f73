"""Subdirect decompositions, the radical factorisation audit, and pattern labels."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Congruence, QuotientError, TernaryGammaSemiring, direct_product, quotient
from .enumeration import are_isomorphic
from .ideals import LatticeReport, all_congruences, all_ideals
from .radical import radical


@dataclass
class SIResult:
    irreducible: bool
    monolith: Congruence | None
    trivial: bool


def is_subdirectly_irreducible(ts: TernaryGammaSemiring, cons: LatticeReport | None = None) -> SIResult:
    """SI iff the nontrivial congruences have a least element (the monolith)."""
    cons = cons or all_congruences(ts)
    if ts.n == 1:
        return SIResult(False, None, True)
    bot = cons.bottom
    nontriv = [i for i in range(len(cons)) if i != bot]
    least = [i for i in nontriv if all(cons.leq[i, j] for j in nontriv)]
    if least:
        return SIResult(True, cons.elements[least[0]], False)
    return SIResult(False, None, False)


@dataclass
class SubdirectDecomposition:
    strategy: str
    congruences: list
    factors: list
    embedding: list
    injective: bool
    factor_si: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "congruences": [list(c.labels) for c in self.congruences],
            "factor_orders": [f.n for f in self.factors],
            "factors": [f.to_dict() for f in self.factors],
            "embedding": [list(t) for t in self.embedding],
            "injective": self.injective,
            "factor_subdirectly_irreducible": self.factor_si,
        }


STRATEGIES = ("maximal", "meet-irreducible")


def subdirect_decomposition(ts: TernaryGammaSemiring, strategy: str = "meet-irreducible",
                            cons: LatticeReport | None = None) -> SubdirectDecomposition:
    """Embed ts into the product of its quotients by the chosen family of congruences.

    ``maximal`` uses the coatoms of the congruence lattice; whether they meet in
    the identity is checked, not assumed.  ``meet-irreducible`` uses every
    congruence with a single upper cover, which always meet in the identity.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    cons = cons or all_congruences(ts)
    k = len(cons)
    top = cons.top
    upper_covers = {i: [] for i in range(k)}
    for i, j in cons.covers():
        upper_covers[i].append(j)
    if strategy == "maximal":
        chosen = [i for i in range(k) if i != top and upper_covers[i] == [top]]
    else:
        chosen = [i for i in range(k) if i != top and len(upper_covers[i]) == 1]
    rhos = [cons.elements[i] for i in chosen]
    factors, projections = [], []
    for rho in rhos:
        q, proj = quotient(ts, rho)
        factors.append(q)
        projections.append(proj)
    embedding = [tuple(p.map[a] for p in projections) for a in range(ts.n)]
    injective = len(set(embedding)) == ts.n
    si = [is_subdirectly_irreducible(f).irreducible for f in factors]
    return SubdirectDecomposition(strategy, rhos, factors, embedding, injective, si)


def wedderburn_check(ts: TernaryGammaSemiring) -> dict:
    """Test ts ~ Rad(ts) x ts/Rad(ts) and the matching ideal-count factorisation."""
    ideals = all_ideals(ts)
    rad = radical(ts, ideals).radical
    out = {"radical": list(rad.members), "radical_size": len(rad) - 1}
    sub = ts.restrict(rad.members)
    try:
        s, _ = quotient(ts, rad)
    except QuotientError as exc:
        out.update(verdict="FAILS", reason=f"quotient by the radical is ill-defined: {exc}", ideal_count_product="FAILS")
        return out
    out["quotient_order"] = s.n
    prod = direct_product(sub, s)
    if prod.n != ts.n:
        out["verdict"] = "FAILS"
        out["reason"] = f"|Rad| * |T/Rad| = {sub.n} * {s.n} != {ts.n}"
        out["isomorphism"] = None
    else:
        iso = are_isomorphic(prod, ts)
        out["verdict"] = "HOLDS" if iso is not None else "FAILS"
        out["isomorphism"] = list(iso) if iso is not None else None
        out["reason"] = None if iso is not None else "no isomorphism between Rad x T/Rad and T"
    n_t, n_r, n_s = len(ideals), len(all_ideals(sub)), len(all_ideals(s))
    out["ideal_counts"] = {"T": n_t, "Rad": n_r, "S": n_s}
    out["ideal_count_product"] = "HOLDS" if n_t == n_r * n_s else "FAILS"
    out["semisimple_label"] = classify_pattern(s)["label"]
    return out


PATTERNS = ("simple", "idempotent-boolean", "subdirectly-decomposable", "other")


def classify_pattern(ts: TernaryGammaSemiring, cons: LatticeReport | None = None) -> dict:
    """Label with precedence simple > idempotent-boolean > subdirectly-decomposable > other."""
    cons = cons or all_congruences(ts)
    n = ts.n
    ar = np.arange(n)
    simple = n >= 2 and len(cons) == 2
    idem = bool(np.array_equal(ts.add[ar, ar], ar) and all(np.array_equal(ts.ops[k, ar, ar, ar], ar) for k in range(ts.m)))
    si = is_subdirectly_irreducible(ts, cons)
    decomposable = not si.irreducible
    ideals = all_ideals(ts)
    flags = {
        "simple": simple,
        "idempotent_boolean": idem,
        "subdirectly_decomposable": decomposable,
        "ideal_simple": n >= 2 and len(ideals) == 2,
        "congruence_count": len(cons),
    }
    if simple:
        label = "simple"
    elif idem:
        label = "idempotent-boolean"
    elif decomposable:
        label = "subdirectly-decomposable"
    else:
        label = "other"
    out = {"label": label, "evidence": flags, "simplicity_notion": "congruence"}
    if label == "other":
        out["congruence_lattice"] = cons.to_dict()
    return out


def decomposition_report(ts: TernaryGammaSemiring) -> dict:
    cons = all_congruences(ts)
    si = is_subdirectly_irreducible(ts, cons)
    maximal = subdirect_decomposition(ts, "maximal", cons)
    birkhoff = subdirect_decomposition(ts, "meet-irreducible", cons)
    ideals = all_ideals(ts)
    factors_simple = all(len(all_congruences(f)) == 2 for f in birkhoff.factors)
    return {
        "subdirectly_irreducible": si.irreducible,
        "monolith": list(si.monolith.labels) if si.monolith else None,
        "maximal": maximal.to_dict(),
        "meet_irreducible": birkhoff.to_dict(),
        "wedderburn": wedderburn_check(ts),
        "pattern": classify_pattern(ts, cons),
        "semisimple_readings": {
            "all_factors_simple": factors_simple,
            "radical_zero": radical(ts, ideals).semiprime,
        },
    }
