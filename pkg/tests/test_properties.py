import numpy as np
from hypothesis import given, settings, strategies as st

from tgsemiring.apps import WeightedGraph, check_code, code_generate, fuzzy_from_chain, ternary_path_values
from tgsemiring.core import TernaryGammaSemiring, build_named, check_axioms
from tgsemiring.enumeration import are_isomorphic, canonical_form, enumerate_additive_monoids, enumerate_structures
from tgsemiring.ideals import all_ideals
from tgsemiring.radical import invariant_tuple
from tgsemiring.spectrum import krull_dimension

CATALOG = [e.structure for n, m in [(2, 1), (2, 2), (3, 1), (3, 2)] for e in enumerate_structures(n, m)]


@st.composite
def structures(draw, max_n=4, max_m=2):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    monoids = enumerate_additive_monoids(n)
    add = monoids[draw(st.integers(0, len(monoids) - 1))]
    flat = draw(st.lists(st.integers(0, n - 1), min_size=m * n**3, max_size=m * n**3))
    return TernaryGammaSemiring(add, np.array(flat).reshape(m, n, n, n))


@st.composite
def perms(draw, n):
    rest = draw(st.permutations(list(range(1, n))))
    return tuple([0] + list(rest))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_canonical_form_orbit_invariant(data):
    ts = data.draw(structures())
    p = data.draw(perms(ts.n))
    rel = ts.relabel(p)
    assert canonical_form(rel).data == canonical_form(ts).data
    bij = are_isomorphic(ts, rel)
    assert bij is not None
    assert canonical_form(canonical_form(ts).structure(ts.n, ts.gamma)).data == canonical_form(ts).data


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_axiom_counts_invariant(data):
    ts = data.draw(structures(max_n=3))
    p = data.draw(perms(ts.n))
    a = check_axioms(ts, "strict")
    b = check_axioms(ts.relabel(p), "strict")
    assert [r.violations for r in a.results] == [r.violations for r in b.results]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_invariants_isomorphism_invariant(ts, data):
    p = data.draw(perms(ts.n))
    rel = ts.relabel(p)
    assert invariant_tuple(rel) == invariant_tuple(ts)
    assert krull_dimension(rel) == krull_dimension(ts)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_code_closure(ts, data):
    ell = data.draw(st.integers(1, 3))
    gens = data.draw(st.lists(st.tuples(*[st.integers(0, ts.n - 1)] * ell), min_size=1, max_size=3))
    code = code_generate(ts, ell, gens)
    assert code.closure_witness() is None
    assert set(map(tuple, gens)) <= set(code.words)
    assert list(code.words) == sorted(code.words)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_syndrome_partition(ts, data):
    ell = data.draw(st.integers(1, 3))
    vec = st.tuples(*[st.integers(0, ts.n - 1)] * ell)
    checks = data.draw(st.lists(st.tuples(st.sampled_from(ts.gamma), vec, vec), max_size=2))
    rep = check_code(ts, ell, checks)
    assert sum(rep["class_sizes"]) == ts.n**ell
    assert all(s > 0 for s in rep["class_sizes"])


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_fuzzy_round_trip(ts, data):
    ideals = all_ideals(ts).elements
    # a chain: take ideals sorted by size, keep nested ones
    picks = sorted(data.draw(st.sets(st.integers(0, len(ideals) - 1), min_size=1)), key=lambda i: len(ideals[i]))
    chain = [ideals[picks[0]]]
    for i in picks[1:]:
        if chain[-1].issubset(ideals[i]) and ideals[i] != chain[-1]:
            chain.append(ideals[i])
    grades = sorted(data.draw(st.sets(st.fractions(0, 1).filter(lambda f: f > 0), min_size=len(chain), max_size=len(chain))), reverse=True)
    rep = fuzzy_from_chain(ts, [(g, I.members) for g, I in zip(grades, chain)])
    assert rep["round_trip"]
    assert rep["fuzzy_ideal"] and rep["cuts_are_ideals"]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_path_fixpoint_stays(data):
    ts = build_named("max_op", data.draw(st.integers(1, 4)))
    V = data.draw(st.integers(1, 4))
    edges = data.draw(st.lists(st.tuples(st.integers(0, V - 1), st.integers(0, V - 1), st.integers(0, ts.n - 1)),
                               max_size=8))
    g = WeightedGraph(V, edges)
    r = ternary_path_values(ts, "1", g)
    assert r.stabilized
    later = ternary_path_values(ts, "1", g, horizon=r.iterations + 5)
    assert np.array_equal(later.reach, r.reach)
