import itertools

import pytest

from tgsemiring.core import Homomorphism, build_named
from tgsemiring.enumeration import enumerate_structures
from tgsemiring.ideals import all_ideals
from tgsemiring.radical import all_prime_ideals
from tgsemiring.spectrum import (
    contract_primes, dimension_report, krull_dimension, longest_chain, prime_avoidance_check, spec_closed_sets,
)

def test_bao_spectrum(bao):
    sp = spec_closed_sets(bao)
    assert [p.members for p in sp.primes] == [(0,)]
    assert sorted(map(sorted, sp.closed_sets)) == [[], [0]]
    assert sp.topology_ok and sp.galois_ok
    assert krull_dimension(bao) == 0


def test_zero_op_spectrum(z03):
    sp = spec_closed_sets(z03)
    assert sp.primes == [] and sp.closed_sets == [frozenset()]
    assert krull_dimension(z03) == -1
    assert krull_dimension(build_named("zero_op", 1)) == -1


def test_square_dimension(baobao):
    primes = all_prime_ideals(baobao)
    # brute force chain search
    best = 0
    for r in range(1, len(primes) + 1):
        for ch in itertools.permutations(primes, r):
            if all(a.issubset(b) and a != b for a, b in zip(ch, ch[1:])):
                best = max(best, r - 1)
    assert krull_dimension(baobao) == best
    assert len(longest_chain(primes)) == best + 1


def test_avoidance(bao):
    assert prime_avoidance_check(bao, "union")["holds"]
    assert prime_avoidance_check(bao, "intersection")["holds"]
    with pytest.raises(ValueError):
        prime_avoidance_check(bao, "sum")


def test_contract_identity(bao):
    rep = contract_primes(Homomorphism(bao, bao, (0, 1)))
    assert rep["map"] == [0] and rep["continuous"]


def test_contract_projection(bao, baobao):
    # pair (x, y) is x*2 + y; first projection
    rep = contract_primes(Homomorphism(baobao, bao, tuple(a // 2 for a in range(4))))
    assert rep["contractions"][0]["contraction"] == [0, 1]
    assert rep["contractions"][0]["prime"] and rep["continuous"]


def test_contract_to_trivial(bao):
    one = build_named("zero_op", 1)
    rep = contract_primes(Homomorphism(bao, one, (0, 0)))
    assert rep["contractions"] == [] and rep["continuous"]


def test_contract_rejects(bao):
    with pytest.raises(ValueError):
        contract_primes(Homomorphism(bao, bao, (1, 0)))


def test_sweep_properties():
    for n, m in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        for e in enumerate_structures(n, m):
            ts = e.structure
            sp = spec_closed_sets(ts)
            assert sp.topology_ok and sp.galois_ok
            ideals = all_ideals(ts).elements
            for I, J in itertools.permutations(ideals, 2):
                if I.issubset(J):
                    assert sp.V[J.hex()] <= sp.V[I.hex()]
            assert prime_avoidance_check(ts, "intersection")["holds"]
            dim = dimension_report(ts)
            if dim["quotient_verdict"] == "FAILS":
                chain = dim["counterexample_chain"]
                assert len(chain) == dim["quotient_dimension"] + 1
