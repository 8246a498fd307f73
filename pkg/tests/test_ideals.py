import itertools

import pytest

from conftest import naive_ideals
from tgsemiring.core import Congruence, IdealSet, build_named, direct_product, is_congruence
from tgsemiring.enumeration import enumerate_structures
from tgsemiring.ideals import (
    all_congruences, all_ideals, correspondence_report, ideal_generate, ideal_witness, is_ideal,
    lattice_shape, set_partitions,
)


def test_ideal_generate(z03, bao):
    assert ideal_generate(z03, []).members == (0,)
    assert ideal_generate(z03, [0, 1, 2]).members == (0, 1, 2)
    assert ideal_generate(z03, [1]).members == (0, 1, 2)
    assert ideal_generate(bao, [1]).members == (0, 1)


def test_ideal_witness(bao):
    assert ideal_witness(bao, IdealSet.of(2, [1])) == ("missing-zero",)
    assert is_ideal(bao, IdealSet.of(2, [0]))


def test_bao_ideals(bao):
    rep = all_ideals(bao)
    assert [s.members for s in rep.elements] == [(0,), (0, 1)]
    assert lattice_shape(rep) == "chain-2"
    assert rep.is_modular and rep.is_distributive


def test_one_element_lattices():
    ts = build_named("zero_op", 1)
    assert len(all_ideals(ts)) == 1 and len(all_congruences(ts)) == 1
    assert lattice_shape(all_ideals(ts)) == "trivial"
    assert correspondence_report(ts).verified


def test_modular_ideals(z3sum):
    # no zero absorption, so {0} is not an ideal and T is the only one
    ids = [s.members for s in all_ideals(z3sum).elements]
    assert ids == [(0, 1, 2)]
    assert {frozenset(s) for s in ids} == set(naive_ideals(z3sum))


def test_congruences_small(bao, z03):
    assert [c.is_identity() or c.is_full() for c in all_congruences(bao).elements] == [True, True]
    assert len(all_congruences(bao)) == 2
    assert len(all_congruences(z03)) == 2


def test_set_partitions_bell():
    assert [sum(1 for _ in set_partitions(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_klein_zero_op_is_diamond():
    z2 = build_named("zero_op", 2)
    k = direct_product(z2, z2)
    assert lattice_shape(all_ideals(k)) == "diamond-M3"
    assert lattice_shape(all_congruences(k)) == "diamond-M3"
    rep = all_ideals(k)
    assert rep.is_modular and not rep.is_distributive
    assert rep.distributive_witness is not None


def test_z3_squared_is_modular_nondistributive(z03):
    rep = all_ideals(direct_product(z03, z03))
    assert len(rep) == 6
    assert lattice_shape(rep) == "modular-nondistributive"


def test_boolean_square(baobao):
    assert lattice_shape(all_ideals(baobao)) == "boolean-2x2"


@pytest.fixture(scope="module")
def small_catalog():
    return [e.structure for n, m in [(2, 1), (3, 1), (3, 2)] for e in enumerate_structures(n, m)]


def test_ideals_match_naive(small_catalog):
    for ts in small_catalog:
        got = {frozenset(s.members) for s in all_ideals(ts).elements}
        assert got == set(naive_ideals(ts))


def test_congruences_match_naive(small_catalog):
    for ts in small_catalog[:40]:
        got = {c.labels for c in all_congruences(ts).elements}
        expect = set()
        for labels in set_partitions(ts.n):
            rho = Congruence.from_labels(labels)
            ok = all(
                rho.relates(int(ts.add[a, c]), int(ts.add[b, c]))
                for a, b in itertools.product(range(ts.n), repeat=2) if rho.relates(a, b) for c in range(ts.n)
            ) and all(
                rho.relates(int(ts.ops[k][tuple(t1)]), int(ts.ops[k][tuple(t2)]))
                for k in range(ts.m)
                for t1 in itertools.product(range(ts.n), repeat=3)
                for t2 in itertools.product(range(ts.n), repeat=3)
                if all(rho.relates(x, y) for x, y in zip(t1, t2))
            )
            if ok:
                expect.add(rho.labels)
        assert got == expect


def test_lattice_tables_consistent(small_catalog):
    for ts in small_catalog:
        for rep in (all_ideals(ts), all_congruences(ts)):
            k = len(rep)
            for i in range(k):
                for j in range(k):
                    J, M = rep.join[i, j], rep.meet[i, j]
                    assert rep.leq[i, J] and rep.leq[j, J] and rep.leq[M, i] and rep.leq[M, j]


def test_congruence_lattice_ops_valid(small_catalog):
    for ts in small_catalog[:20]:
        for c in all_congruences(ts).elements:
            assert is_congruence(ts, c)


def test_correspondence_zero_op(z03):
    rep = correspondence_report(z03)
    assert not rep.injective and rep.injective_witness is not None
    assert all(len(r["pairs"]) == 9 for r in rep.to_dict()["rows"])


def test_correspondence_bao_verbatim(bao):
    # the relation of {0} is computed exactly as defined: (1,1) fails since min(1,1,1) = 1
    rep = correspondence_report(bao).to_dict()
    row = rep["rows"][0]
    assert row["members"] == [0]
    assert not row["reflexive"]["holds"] and tuple(row["reflexive"]["witness"]) == (1, 1)
    assert not rep["verified"]
