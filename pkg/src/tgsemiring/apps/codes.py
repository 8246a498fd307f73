"""Codes in T^l closed under componentwise + and ternary products."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import QuotientError, TernaryGammaSemiring, quotient
from ..radical import radical

DEFAULT_BUDGET = 10**6


class BudgetExceeded(ValueError):
    pass


def _check_budget(n: int, length: int, budget: int) -> None:
    if length < 1:
        raise ValueError("code length must be at least 1")
    if n**length > budget:
        raise BudgetExceeded(f"|T|^l = {n}^{length} exceeds budget {budget}")


def all_vectors(n: int, length: int) -> np.ndarray:
    """Every vector of T^l, one per row, in lexicographic order."""
    grids = np.meshgrid(*[np.arange(n)] * length, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def _encode(vecs: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(vecs.shape[1] - 1, -1, -1, dtype=np.int64)
    return vecs @ weights


def _decode(codes: np.ndarray, n: int, length: int) -> np.ndarray:
    out = np.empty((codes.size, length), dtype=np.int64)
    c = codes.copy()
    for i in range(length - 1, -1, -1):
        out[:, i] = c % n
        c //= n
    return out


@dataclass(frozen=True)
class GammaLinearCode:
    ts: TernaryGammaSemiring
    length: int
    words: tuple

    def __len__(self):
        return len(self.words)

    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.length)

    def closure_witness(self):
        """A sum or product leaving the code, or None."""
        arr = self.array()
        n = self.ts.n
        words = set(_encode(arr, n).tolist())
        sums = self.ts.add[arr[:, None, :], arr[None, :, :]].reshape(-1, self.length)
        bad = [int(i) for i in np.nonzero(~np.isin(_encode(sums, n), list(words)))[0][:1]]
        if bad:
            return ("+", tuple(sums[bad[0]]))
        for k, g in enumerate(self.ts.gamma):
            prod = self.ts.ops[k][arr[:, None, None, :], arr[None, :, None, :], arr[None, None, :, :]]
            prod = prod.reshape(-1, self.length)
            miss = np.nonzero(~np.isin(_encode(prod, n), list(words)))[0]
            if miss.size:
                return (g, tuple(int(v) for v in prod[miss[0]]))
        return None


def code_generate(ts: TernaryGammaSemiring, length: int, generators, budget: int = DEFAULT_BUDGET) -> GammaLinearCode:
    """Least set containing the generators and closed under + and every {...}_g, componentwise."""
    _check_budget(ts.n, length, budget)
    gens = np.array(generators, dtype=np.int64).reshape(-1, length) if len(generators) else np.empty((0, length))
    if gens.shape[0] == 0:
        raise ValueError("a code needs at least one generator")
    if gens.min() < 0 or gens.max() >= ts.n:
        raise ValueError("generator entry outside the carrier")
    n = ts.n
    known = np.unique(_encode(gens, n))
    new = known
    while new.size:
        A = _decode(known, n, length)
        N = _decode(new, n, length)
        cand = [ts.add[N[:, None, :], A[None, :, :]].reshape(-1, length)]
        for M in ts.ops:
            # at least one argument from the newest layer, in every position
            cand.append(M[N[:, None, None, :], A[None, :, None, :], A[None, None, :, :]].reshape(-1, length))
            cand.append(M[A[:, None, None, :], N[None, :, None, :], A[None, None, :, :]].reshape(-1, length))
            cand.append(M[A[:, None, None, :], A[None, :, None, :], N[None, None, :, :]].reshape(-1, length))
        got = np.unique(_encode(np.concatenate(cand), n))
        new = np.setdiff1d(got, known)
        known = np.union1d(known, new)
    words = tuple(tuple(int(x) for x in row) for row in _decode(known, n, length))
    return GammaLinearCode(ts, length, words)


def hamming_weight(vecs: np.ndarray, zero_class=None) -> np.ndarray:
    """Count coordinates that are nonzero (or, with ``zero_class``, outside that class)."""
    if zero_class is None:
        return (vecs != 0).sum(axis=1)
    return (~np.isin(vecs, list(zero_class))).sum(axis=1)


def _distribution(weights: np.ndarray, length: int) -> list:
    return np.bincount(weights, minlength=length + 1).tolist()


def _radical_projection(ts: TernaryGammaSemiring):
    rad = radical(ts).radical
    s, proj = quotient(ts, rad)
    return rad, s, np.array(proj.map, dtype=np.int64)


def weight_report(ts: TernaryGammaSemiring, code: GammaLinearCode) -> dict:
    """Weight distributions of a code and of its image in T/Rad(T)."""
    arr = code.array()
    ell = code.length
    rad, s, proj = _radical_projection(ts)
    zero_class = [a for a in range(ts.n) if proj[a] == 0]
    plain = hamming_weight(arr)
    coset = hamming_weight(arr, zero_class)
    img = proj[arr]
    img_codes = _encode(img, s.n)
    uniq, first = np.unique(img_codes, return_index=True)
    img_set = img[np.sort(first)]
    img_w = hamming_weight(img_set)
    out = {
        "length": ell,
        "size": len(code),
        "radical": list(rad.members),
        "quotient_order": s.n,
        "distribution": _distribution(plain, ell),
        "coset_distribution": _distribution(coset, ell),
        "image_size": int(uniq.size),
        "image_distribution": _distribution(img_w, ell),
        "image_multiset_distribution": _distribution(hamming_weight(img), ell),
    }
    out["equal"] = out["distribution"] == out["image_distribution"]
    out["coset_weight_equal"] = out["coset_distribution"] == out["image_multiset_distribution"]
    if not out["equal"]:
        changed = np.nonzero(plain != hamming_weight(img))[0]
        if changed.size:
            i = int(changed[0])
            out["witness"] = {"codeword": arr[i].tolist(), "weight": int(plain[i]),
                              "image": img[i].tolist(), "image_weight": int(hamming_weight(img[i:i + 1])[0])}
        else:
            out["witness"] = {"collision": "distinct codewords share an image", "image_size": int(uniq.size)}
        out["note"] = ("projection does not preserve the plain weight; a weight constant on radical "
                       "cosets is preserved only when counted with multiplicity")
    return out


@dataclass(frozen=True)
class CheckOperator:
    gamma: str
    u: tuple
    v: tuple

    def apply(self, ts: TernaryGammaSemiring, vecs: np.ndarray) -> np.ndarray:
        M = ts.op(self.gamma)
        u = np.asarray(self.u, dtype=np.int64)
        v = np.asarray(self.v, dtype=np.int64)
        return M[u[None, :], vecs, v[None, :]]


def _negation(add: np.ndarray):
    n = add.shape[0]
    neg = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        hit = np.nonzero(add[a] == 0)[0]
        if hit.size == 0:
            return None
        neg[a] = hit[0]
    return neg


def minimum_distance(ts: TernaryGammaSemiring, words: np.ndarray):
    """Least distance between distinct codewords: w(x - y) for groups, w(x + y) otherwise."""
    if words.shape[0] < 2:
        return None
    neg = _negation(ts.add)
    best = None
    for i in range(words.shape[0]):
        other = np.delete(words, i, axis=0)
        x = words[i][None, :]
        diff = ts.add[x, neg[other]] if neg is not None else ts.add[x, other]
        d = int(hamming_weight(diff).min())
        best = d if best is None else min(best, d)
    return best


def _syndromes(ts, ell, checks):
    vecs = all_vectors(ts.n, ell)
    if not checks:
        return vecs, np.zeros(vecs.shape[0], dtype=np.int64), np.ones(vecs.shape[0], dtype=bool)
    outs = np.concatenate([c.apply(ts, vecs) for c in checks], axis=1)
    kernel = (outs == 0).all(axis=1)
    _, cls = np.unique(outs, axis=0, return_inverse=True)
    return vecs, cls.ravel(), kernel


def check_code(ts: TernaryGammaSemiring, length: int, checks, budget: int = DEFAULT_BUDGET) -> dict:
    """Common kernel of the check operators, the syndrome partition, and the same over T/Rad(T)."""
    _check_budget(ts.n, length, budget)
    checks = [c if isinstance(c, CheckOperator) else CheckOperator(*c) for c in checks]
    for c in checks:
        if len(c.u) != length or len(c.v) != length:
            raise ValueError("check vectors must have the code length")
    vecs, cls, kernel = _syndromes(ts, length, checks)
    words = vecs[kernel]
    code = GammaLinearCode(ts, length, tuple(tuple(int(x) for x in w) for w in words))
    sizes = np.bincount(cls)
    out = {
        "kernel": [list(w) for w in code.words],
        "kernel_size": len(code),
        "syndrome_classes": int(sizes.size),
        "class_sizes": sizes.tolist(),
        "partition_ok": int(sizes.sum()) == vecs.shape[0],
        "minimum_distance": minimum_distance(ts, words),
    }
    try:
        _, s, proj = _radical_projection(ts)
    except QuotientError as exc:
        out["quotient"] = {"error": str(exc)}
        return out
    s_checks = [CheckOperator(c.gamma, tuple(int(proj[x]) for x in c.u), tuple(int(proj[x]) for x in c.v)) for c in checks]
    svecs, scls, skernel = _syndromes(s, length, s_checks)
    ssizes = np.bincount(scls)
    out["quotient"] = {
        "order": s.n,
        "kernel_size": int(skernel.sum()),
        "syndrome_classes": int(ssizes.size),
        "minimum_distance": minimum_distance(s, svecs[skernel]),
    }
    out["same_partition_size"] = out["syndrome_classes"] == out["quotient"]["syndrome_classes"]
    out["same_minimum_distance"] = out["minimum_distance"] == out["quotient"]["minimum_distance"]
    out["code"] = code
    return out
