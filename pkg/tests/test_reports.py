import csv
import io

import pytest

from tgsemiring.core import STRICT, build_named
from tgsemiring.enumeration import Catalog, _entry, enumerate_structures
from tgsemiring.reports import render_table, table1, table5, table6


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_table1_reference_columns():
    cats = [enumerate_structures(n, m) for n, m in [(2, 1), (3, 1)]]
    r = rows(table1(cats))
    assert r[0][6:9] == ["paper_ref_value_additive", "paper_ref_value_valid", "paper_ref_value_feature"]
    assert r[1][:5] == ["2", "1", "strict", "2", str(len(cats[0]))]
    assert r[1][6:8] == ["1", "1"]
    assert r[2][6:8] == ["5", "2"]


def test_table5_single_chain_row():
    bao = build_named("boolean_and_or", 2)
    cat = Catalog(2, 1, "strict", entries=[_entry(bao, STRICT, False, "")])
    r = rows(table5([cat]))
    assert len(r) == 2 and r[1][0] == "Chain (simple)" and r[1][2] == "1"


def test_table6_row_cites_entry():
    cat = enumerate_structures(2, 1)
    r = rows(table6([cat]))
    assert len(r) == len(cat) + 1
    for row, e in zip(r[1:], cat):
        assert row[8] == e.canonical.hex()
        assert [int(x) for x in row[1:7]] == list(e.invariants)
        assert row[-1] == "2 1 2 1 0 Boolean simple"


def test_unknown_table():
    with pytest.raises(ValueError):
        render_table("4", [])


def test_empty_catalog_header_only():
    for t in ("1", "5", "6", "7"):
        assert len(rows(render_table(t, [Catalog(2, 1, "strict")]))) in (1, 2)
    assert len(rows(render_table("6", [Catalog(2, 1, "strict")]))) == 1
