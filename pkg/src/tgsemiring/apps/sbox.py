"""Differential profiles of the maps (x, y, z) -> {x y z}_g."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from ..core import QuotientError, TernaryGammaSemiring, quotient
from ..radical import radical


def is_group(add: np.ndarray) -> bool:
    return bool(all((row == 0).any() for row in add))


def difference_table(ts: TernaryGammaSemiring, gamma: str) -> np.ndarray:
    """D[a, b, c, d] = #{(x, y, z) : {x+a, y+b, z+c} = {x y z} + d}."""
    n, add = ts.n, ts.add
    M = ts.op(gamma)
    # shifted[a, x] = x + a
    sx = add.T
    F = M[sx[:, None, None, :, None, None], sx[None, :, None, None, :, None], sx[None, None, :, None, None, :]]
    rhs = add[M]  # rhs[x, y, z, d] = {xyz} + d
    D = np.zeros((n, n, n, n), dtype=np.int64)
    for d in range(n):
        D[..., d] = (F == rhs[None, None, None, ..., d]).sum(axis=(3, 4, 5))
    return D


def uniformity(D: np.ndarray) -> int:
    n = D.shape[0]
    if n == 1:
        return int(D.max())
    flat = D.reshape(n**3, n)
    return int(flat[1:].max())


@dataclass
class SBoxProfile:
    gamma: str
    table: np.ndarray
    delta: int
    group: bool

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def row_sums(self) -> np.ndarray:
        return self.table.sum(axis=3)

    def partition_ok(self) -> bool:
        """Row sums equal n^3 everywhere; only guaranteed for group reducts."""
        return bool((self.row_sums() == self.n**3).all())

    def to_dict(self) -> dict:
        sums = self.row_sums()
        return {
            "gamma": self.gamma,
            "n": self.n,
            "delta": self.delta,
            "group_reduct": self.group,
            "row_sums_min": int(sums.min()),
            "row_sums_max": int(sums.max()),
            "partition_ok": self.partition_ok(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["a", "b", "c", "d", "count"])
        for idx in np.ndindex(self.table.shape):
            w.writerow([*idx, int(self.table[idx])])
        return buf.getvalue()


def _profile(ts: TernaryGammaSemiring, gamma: str) -> SBoxProfile:
    D = difference_table(ts, gamma)
    return SBoxProfile(gamma, D, uniformity(D), is_group(ts.add))


def sbox_differential_profile(ts: TernaryGammaSemiring, gamma: str | None = None) -> tuple:
    """Profile over ts and over ts/Rad(ts); returns (profile, lift report)."""
    gamma = ts.gamma[0] if gamma is None else gamma
    prof = _profile(ts, gamma)
    lift = {"delta": prof.delta}
    try:
        s, _ = quotient(ts, radical(ts).radical)
    except QuotientError as exc:
        lift.update(quotient_delta=None, error=str(exc))
        return prof, lift
    q = _profile(s, gamma)
    lift.update(
        quotient_order=s.n,
        quotient_delta=q.delta,
        same_delta=q.delta == prof.delta,
        # the quotient bound is attained when delta scales by |Rad coset|^3
        scaled_quotient_delta=q.delta * (ts.n // s.n) ** 3 if ts.n % s.n == 0 else None,
    )
    if prof.group and not prof.partition_ok():
        lift["partition_violation"] = True
    return prof, lift
