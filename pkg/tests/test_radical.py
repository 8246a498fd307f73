import pytest

from conftest import naive_primes
from tgsemiring.core import IdealSet, build_named, quotient
from tgsemiring.enumeration import enumerate_structures
from tgsemiring.radical import (
    NilDefinition, all_prime_ideals, cancellation_check, find_identities, invariant_tuple, is_prime,
    nilpotents, rad_nil_report, radical,
)


def test_nil_zero_op(z03):
    for d in NilDefinition:
        assert nilpotents(z03, d).members == (0, 1, 2)


def test_nil_bao(bao):
    assert nilpotents(bao, "power").members == (0,)
    # absorbing zero makes the literal chain reach 0 for every x
    assert nilpotents(bao, "literal").members == (0, 1)


def test_primes(bao, z03):
    assert [p.members for p in all_prime_ideals(bao)] == [(0,)]
    assert all_prime_ideals(z03) == []
    assert all_prime_ideals(build_named("zero_op", 1)) == []
    assert not is_prime(bao, IdealSet.full(2))


def test_radical(bao, z03):
    r = radical(bao)
    assert r.radical.members == (0,) and r.semiprime
    assert radical(z03).radical.members == (0, 1, 2)


@pytest.mark.parametrize("name", ["zero2", "bao", "one"])
def test_rad_nil_equal(name, bao):
    ts = {"zero2": build_named("zero_op", 2), "bao": bao, "one": build_named("zero_op", 1)}[name]
    assert rad_nil_report(ts, "power").equal


def test_cancellation(bao, z03):
    rep = cancellation_check(bao)
    assert not rep["cancellative"]
    w = rep["cancellation_witness"]
    assert (w["a"], w["b"]) == (0, 0) and w["value"] == 0
    rep = cancellation_check(z03)
    assert rep["quotient_order"] == 1 and rep["cancellative"]


def test_identities(bao, z03, z3sum):
    ids = find_identities(bao)
    assert ids["absorbing_zeros"] == [0] and ids["units"] == [1] and ids["idempotence_implication"]["holds"]
    ids = find_identities(z03)
    assert ids["absorbing_zeros"] == [0] and ids["units"] == []
    ids = find_identities(z3sum)
    assert ids["absorbing_zeros"] == [] and ids["units"] == [0]


def test_invariants(bao):
    assert invariant_tuple(build_named("zero_op", 1)) == (1, 1, 1, 1, 0, 0)
    assert invariant_tuple(bao) == (2, 1, 2, 2, 0, 0)


def test_primes_match_naive():
    for n, m in [(2, 1), (3, 1), (3, 2)]:
        for e in enumerate_structures(n, m):
            got = {frozenset(p.members) for p in all_prime_ideals(e.structure)}
            assert got == set(naive_primes(e.structure))


def test_power_nil_by_hand_search():
    # x is nilpotent iff iterating y -> {y x x}_g over every g reaches 0
    for e in enumerate_structures(3, 2):
        ts = e.structure
        for x in range(ts.n):
            seen, frontier = set(), {int(ts.ops[k, x, x, x]) for k in range(ts.m)}
            while frontier - seen:
                seen |= frontier
                frontier = {int(ts.ops[k, y, x, x]) for y in frontier for k in range(ts.m)}
            assert (0 in seen) == (x in nilpotents(ts, "power"))


def test_quotient_by_radical_semiprime_catalog():
    for e in enumerate_structures(3, 1):
        q, _ = quotient(e.structure, radical(e.structure).radical)
        assert q.n >= 1
