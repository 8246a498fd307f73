import pytest

from tgsemiring.core import build_named
from tgsemiring.decomposition import (
    classify_pattern, decomposition_report, is_subdirectly_irreducible, subdirect_decomposition, wedderburn_check,
)
from tgsemiring.enumeration import are_isomorphic, enumerate_structures
from tgsemiring.ideals import all_ideals


def test_si(bao, baobao):
    assert is_subdirectly_irreducible(build_named("zero_op", 1)).trivial
    si = is_subdirectly_irreducible(bao)
    assert si.irreducible and si.monolith.is_full()
    assert not is_subdirectly_irreducible(baobao).irreducible


@pytest.mark.parametrize("strategy", ["maximal", "meet-irreducible"])
def test_decompose_simple(bao, strategy):
    d = subdirect_decomposition(bao, strategy)
    assert len(d.factors) == 1 and d.injective
    assert are_isomorphic(d.factors[0], bao) is not None


def test_decompose_square(bao, baobao):
    d = subdirect_decomposition(baobao)
    assert d.injective and len(d.factors) == 2
    assert all(are_isomorphic(f, bao) is not None for f in d.factors)


def test_wedderburn(z03, bao):
    w = wedderburn_check(z03)
    assert w["verdict"] == "HOLDS" and w["quotient_order"] == 1
    assert wedderburn_check(bao)["verdict"] == "HOLDS"


def test_patterns(bao, baobao):
    assert classify_pattern(bao)["label"] == "simple"
    assert classify_pattern(baobao)["label"] == "idempotent-boolean"
    z2 = build_named("zero_op", 2)
    assert classify_pattern(z2)["label"] == "simple"


def test_other_has_dump():
    for e in enumerate_structures(3, 1):
        p = classify_pattern(e.structure)
        if p["label"] == "other":
            assert "congruence_lattice" in p


def test_catalog_sweep():
    for n, m in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        for e in enumerate_structures(n, m):
            ts = e.structure
            d = subdirect_decomposition(ts)
            assert d.injective
            si = is_subdirectly_irreducible(ts)
            # SI iff the meet-irreducible family is ts itself, up to iso
            if si.irreducible:
                assert any(f.n == ts.n for f in d.factors)
            else:
                assert all(f.n < ts.n for f in d.factors)
            w = wedderburn_check(ts)
            assert w["verdict"] in ("HOLDS", "FAILS")
            if w["verdict"] == "HOLDS" and w["ideal_count_product"] == "HOLDS":
                c = w["ideal_counts"]
                assert len(all_ideals(ts)) == c["Rad"] * c["S"]


def test_report_shape(baobao):
    rep = decomposition_report(baobao)
    assert rep["meet_irreducible"]["injective"]
    assert rep["pattern"]["label"] == "idempotent-boolean"
    assert set(rep["semisimple_readings"]) == {"all_factors_simple", "radical_zero"}
