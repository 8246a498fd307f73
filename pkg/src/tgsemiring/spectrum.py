"""The prime spectrum: closed sets, the radical-ideal Galois connection, dimension."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .core import Homomorphism, IdealSet, QuotientError, TernaryGammaSemiring, is_homomorphism, quotient
from .ideals import all_ideals, is_ideal
from .radical import all_prime_ideals, is_prime, radical


def _meet_of(n: int, primes, idx) -> IdealSet:
    out = IdealSet.full(n)
    for i in idx:
        out = out & primes[i]
    return out


@dataclass
class SpectrumPoset:
    primes: list
    inclusion: list
    closed_sets: list
    V: dict
    topology_ok: bool
    topology_witness: tuple | None
    galois_ok: bool
    galois_witness: tuple | None
    radical_ideals: list

    def to_dict(self) -> dict:
        return {
            "primes": [p.hex() for p in self.primes],
            "prime_members": [list(p.members) for p in self.primes],
            "inclusion": [list(e) for e in self.inclusion],
            "closed_sets": [sorted(c) for c in self.closed_sets],
            "V": {k: sorted(v) for k, v in self.V.items()},
            "topology_ok": self.topology_ok,
            "topology_witness": self.topology_witness,
            "galois_ok": self.galois_ok,
            "galois_witness": self.galois_witness,
            "radical_ideals": [r.hex() for r in self.radical_ideals],
        }

    def to_dot(self) -> str:
        lines = ["digraph Spec {", "  rankdir=BT;"]
        for i, p in enumerate(self.primes):
            lines.append(f'  p{i} [label="{p!r}"];')
        for i, j in self.inclusion:
            lines.append(f"  p{i} -> p{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def spec_closed_sets(ts: TernaryGammaSemiring) -> SpectrumPoset:
    """Closed sets V(I) over every ideal, audited as a topology and as a Galois connection."""
    ideals = all_ideals(ts).elements
    primes = all_prime_ideals(ts)
    n, k = ts.n, len(primes)
    V = {I.hex(): frozenset(i for i, p in enumerate(primes) if I.issubset(p)) for I in ideals}
    closed = sorted(set(V.values()), key=lambda s: (len(s), sorted(s)))
    closed_set = set(closed)
    inclusion = [(i, j) for i in range(k) for j in range(k) if i != j and primes[i].issubset(primes[j])]

    topo_w = None
    if frozenset() not in closed_set:
        topo_w = ("empty set not closed",)
    elif frozenset(range(k)) not in closed_set:
        topo_w = ("whole spectrum not closed",)
    else:
        for a, b in itertools.combinations_with_replacement(closed, 2):
            if a | b not in closed_set:
                topo_w = ("union", sorted(a), sorted(b))
                break
            if a & b not in closed_set:
                topo_w = ("intersection", sorted(a), sorted(b))
                break

    radical_ideals = [I for I in ideals if _meet_of(n, primes, V[I.hex()]) == I]
    gal_w = None
    # Galois closure: I inside the meet of V(I); X inside V(meet of X) for closed X
    for I in ideals:
        if not I.issubset(_meet_of(n, primes, V[I.hex()])):
            gal_w = ("I not inside meet of V(I)", I.hex())
            break
    if gal_w is None:
        for X in closed:
            J = _meet_of(n, primes, X)
            VJ = frozenset(i for i, p in enumerate(primes) if J.issubset(p))
            if not X <= VJ:
                gal_w = ("X not inside V(meet X)", sorted(X))
                break
            if VJ != X:
                gal_w = ("closed set not recovered", sorted(X), sorted(VJ))
                break
            if J not in radical_ideals:
                gal_w = ("meet of closed set is not a radical ideal", sorted(X), J.hex())
                break
    if gal_w is None:
        images = {V[I.hex()] for I in radical_ideals}
        if len(images) != len(radical_ideals):
            gal_w = ("two radical ideals share a closed set",)
        elif images != closed_set:
            gal_w = ("closed sets and radical ideals not in bijection",)
        else:
            for I, J in itertools.permutations(radical_ideals, 2):
                if I.issubset(J) and not V[J.hex()] <= V[I.hex()]:
                    gal_w = ("V not order-reversing", I.hex(), J.hex())
                    break
    return SpectrumPoset(primes, inclusion, closed, V, topo_w is None, topo_w, gal_w is None, gal_w, radical_ideals)


def krull_dimension(ts: TernaryGammaSemiring, primes: list | None = None) -> int:
    """Length of the longest strict chain of primes; -1 when there are no primes."""
    primes = all_prime_ideals(ts) if primes is None else primes
    if not primes:
        return -1
    order = sorted(range(len(primes)), key=lambda i: len(primes[i]))
    depth = {}
    for i in order:
        below = [depth[j] for j in depth if primes[j].issubset(primes[i]) and primes[j] != primes[i]]
        depth[i] = 1 + max(below) if below else 0
    return max(depth.values())


def longest_chain(primes: list) -> list:
    above = {i: [j for j in range(len(primes)) if j != i and primes[i].issubset(primes[j]) and primes[i] != primes[j]]
             for i in range(len(primes))}

    @functools.lru_cache(maxsize=None)
    def best_from(i):
        tails = [best_from(j) for j in above[i]]
        return (i,) + max(tails, key=len, default=())

    chains = [best_from(i) for i in range(len(primes))]
    return [primes[i] for i in max(chains, key=len, default=())]


def dimension_report(ts: TernaryGammaSemiring) -> dict:
    """Dimension of ts and of ts/Rad(ts), with the zero-dimensional quotient verdict."""
    dim = krull_dimension(ts)
    out = {"dimension": dim}
    try:
        q, _ = quotient(ts, radical(ts).radical)
    except QuotientError as exc:
        out.update(quotient_dimension=None, quotient_verdict="UNDEFINED", reason=str(exc))
        return out
    qp = all_prime_ideals(q)
    qdim = krull_dimension(q, qp)
    out["quotient_order"] = q.n
    out["quotient_dimension"] = qdim
    out["quotient_verdict"] = "HOLDS" if qdim in (0, -1) else "FAILS"
    if qdim > 0:
        out["counterexample_chain"] = [list(p.members) for p in longest_chain(qp)]
    return out


def prime_avoidance_check(ts: TernaryGammaSemiring, variant: str = "union", max_family: int = 3) -> dict:
    """If I lies in the union (or, as printed, the intersection) of some primes, it lies in one of them."""
    if variant not in ("union", "intersection"):
        raise ValueError("variant must be 'union' or 'intersection'")
    ideals = all_ideals(ts).elements
    primes = all_prime_ideals(ts)
    failures, tested = [], 0
    for I in ideals:
        for r in range(1, min(max_family, len(primes)) + 1):
            for fam in itertools.combinations(primes, r):
                acc = fam[0]
                for p in fam[1:]:
                    acc = (acc | p) if variant == "union" else (acc & p)
                tested += 1
                if I.issubset(acc) and not any(I.issubset(p) for p in fam):
                    failures.append({"ideal": list(I.members), "primes": [list(p.members) for p in fam]})
    return {"variant": variant, "tested": tested, "holds": not failures, "counterexamples": failures}


def contract_primes(f: Homomorphism) -> dict:
    """Preimages of the target's primes, whether they are prime, and continuity of the induced map."""
    check = is_homomorphism(f.source, f.target, f.map)
    if not check:
        raise ValueError(f"not a homomorphism: {check.witness}")
    src, tgt = f.source, f.target
    src_primes = all_prime_ideals(src)
    tgt_primes = all_prime_ideals(tgt)
    rows = []
    image = []
    for p in tgt_primes:
        pre = IdealSet.of(src.n, [a for a in range(src.n) if f.map[a] in p])
        prime = is_prime(src, pre) and is_ideal(src, pre)
        rows.append({"target_prime": list(p.members), "contraction": list(pre.members), "prime": prime})
        image.append(src_primes.index(pre) if prime and pre in src_primes else None)
    well_defined = all(i is not None for i in image)
    continuous = None
    cont_w = None
    if well_defined:
        tgt_closed = {frozenset(i for i, p in enumerate(tgt_primes) if J.issubset(p)) for J in all_ideals(tgt).elements}
        continuous = True
        for I in all_ideals(src).elements:
            VI = {i for i, p in enumerate(src_primes) if I.issubset(p)}
            pre = frozenset(j for j, i in enumerate(image) if i in VI)
            if pre not in tgt_closed:
                continuous, cont_w = False, {"closed_set_of_ideal": list(I.members), "preimage": sorted(pre)}
                break
    return {
        "contractions": rows,
        "map": image,
        "well_defined": well_defined,
        "continuous": continuous,
        "continuity_witness": cont_w,
        "surjective": well_defined and set(image) == set(range(len(src_primes))),
    }


def spectrum_report(ts: TernaryGammaSemiring) -> dict:
    sp = spec_closed_sets(ts)
    return {
        **sp.to_dict(),
        **dimension_report(ts),
        "prime_avoidance": {v: prime_avoidance_check(ts, v) for v in ("union", "intersection")},
    }
