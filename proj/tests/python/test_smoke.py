from fractions import Fraction
from pathlib import Path

import pytest

import ordercomplete as oc

DATA = Path(__file__).resolve().parents[2] / "data" / "n11"


def recipe(name):
    return oc.read_recipe(DATA / name)


def test_expand_h():
    val, coeffs, trunc = oc.expand(recipe("h.recipe"), 1)
    assert val == -4 and trunc == 1
    assert coeffs == [11, 165, 748, 1639, 3553]


def test_relation_example1():
    p = oc.find_relation(recipe("t.recipe"), recipe("f1.recipe"))
    assert p[(0, 5)] == 1
    assert p[(1, 4)] == 170
    assert p[(4, 0)] == 5**5 * 11**6


def test_basis_and_decomposition():
    s = oc.Session(recipe("t.recipe"), recipe("f1.recipe"))
    assert sorted(s.d) == [0, 1, 1, 1, 2]
    b = s.basis(d=1, trunc=5)
    assert [e["pole_order"] for e in b["entries"]] == [0, 2, 3, 4, 5]
    assert b["gaps"] == [1]
    dec = s.express(recipe("h.recipe"), window=60)
    assert [(o, [Fraction(c) for c in cs]) for o, cs in dec["terms"]] == [(4, [11]), (3, [165]), (2, [748]), (0, [3553])]
    assert dec["residual_valuation"] >= 60
    assert dec["identity_valuation"] >= 60


def test_errors():
    with pytest.raises(oc.ParseError):
        oc.expand("(* (q", 3)
    with pytest.raises(oc.CoprimalityError):
        oc.find_relation(recipe("t.recipe"), recipe("t.recipe"))
    with pytest.raises(oc.Error):
        oc.Session(recipe("t.recipe"), recipe("f1.recipe")).express("(q -1)")


def test_congruence():
    assert oc.check_congruence(11, 6, 11, 200) == []
    assert oc.check_congruence(11, 5, 11, 10)
