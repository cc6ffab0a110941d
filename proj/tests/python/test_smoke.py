from fractions import Fraction

import pytest

import nilspan


def test_verify_g2():
    r = nilspan.verify("g2(2)")
    assert r["dim_b"] == 2 and r["dim_span"] == 2
    assert r["theorem_holds"] and r["easy_inclusion"]
    assert r["paper_basis_verified"]


def test_verify_all_small_bound():
    reports = nilspan.verify_all(bound=6, jobs=2)
    assert len(reports) == len(nilspan.catalog(6))
    assert all(r["theorem_holds"] for r in reports)


def test_b_subspace_is_exact():
    rows = nilspan.b_subspace("e6(-26)")
    assert rows == [[Fraction(1), 0, 0, 0, 1, 0]]
    assert all(isinstance(x, Fraction) for x in rows[0])


def test_satake_and_dot():
    s = nilspan.satake("su(3,1)")
    assert s["type"] == "A3" and s["black"] == [2]
    assert nilspan.satake_dot("sl(4,R)").startswith("graph")


def test_orbits_and_iota():
    assert len(nilspan.orbits("G2")) == 5
    assert nilspan.opposition_involution("E6") == [4, 3, 2, 1, 0, 5]
    assert len(nilspan.h_n_a_plus("sl(3,R)")) == 3


def test_characteristic_oracle():
    ok, witness = nilspan.is_characteristic("G2", [2, 0])
    assert ok and set(witness) == {"H", "E", "F"}
    ok, witness = nilspan.is_characteristic("G2", [0, 2])
    assert not ok and witness is None


def test_pairs():
    m = nilspan.lookup_pair("su(4,2)", "sp(2,1)")
    assert m["bindings"] == {"p": 2, "q": 1}
    assert nilspan.lookup_pair("sl(4,R)", "so(2,2)") is None
    assert sum(1 for r in nilspan.proper_sl2_pairs() if r["corrected_from"]) == 4


def test_label_errors():
    assert nilspan.normalize_label("su(2,4)") == "su(4,2)"
    with pytest.raises(nilspan.LabelError):
        nilspan.verify("so(3,3)")
    with pytest.raises(ValueError):
        nilspan.satake("su(3,0)")
