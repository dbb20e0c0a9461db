from fractions import Fraction

import pytest

import mhall
from mhall import Matroid


def test_enumeration_counts():
    assert [len(mhall.enumerate_classes(n)) for n in range(5)] == [1, 2, 4, 8, 17]


def test_construction_and_minors():
    u23 = Matroid.uniform(2, 3)
    assert u23.rank == 2
    assert u23.degree == 3
    assert u23.closure(["1", "2"]) == ["*", "1", "2", "3"]
    assert u23.restrict(["1", "2"]).is_isomorphic(Matroid.free(2))
    assert u23.contract(["1"]).is_isomorphic(Matroid.uniform(1, 2))
    assert {frozenset(c) for c in u23.cocircuits()} == {
        frozenset({"2", "3"}),
        frozenset({"1", "3"}),
        frozenset({"1", "2"}),
    }


def test_validation_errors():
    with pytest.raises(ValueError):
        Matroid.from_flats(["*", "1"], [["*"]])  # ground set is not a flat


def test_graph_and_bases_agree():
    triangle = Matroid.from_graph(
        ["u", "v", "w"],
        [("e0", "u", "u"), ("1", "u", "v"), ("2", "v", "w"), ("3", "w", "u")],
        "e0",
    )
    bases = Matroid.from_bases(["*", "1", "2", "3"], [["1", "2"], ["1", "3"], ["2", "3"]])
    assert triangle.is_isomorphic(bases)
    assert triangle.is_isomorphic(Matroid.uniform(2, 3))


def test_iso_witness_and_json():
    ab = Matroid.fixture("a+b")
    ba = Matroid.fixture("b+a")
    witness = ab.iso_witness(ba)
    assert witness is not None and witness["*"] == "*"
    assert ab.iso_witness(Matroid.fixture("a+a")) is None
    again = Matroid.from_json(ab.to_json())
    assert again == ab


def test_k_theory():
    u23 = Matroid.uniform(2, 3)
    assert u23.k0() == (2, 1)
    assert u23.decompose() == "aab"
    assert (Matroid.fixture("a") + Matroid.fixture("b")).k0() == (1, 1)
    assert mhall.flag_count(Matroid.fixture("a+b"), 2) == 9
    assert mhall.check_flag_grids(u23, 3)


def test_hall_identities():
    a = Matroid.fixture("a")
    b = Matroid.fixture("b")
    product = mhall.hall_product(b, a)
    assert product[(a + b).canon()] == Fraction(1)
    assert product[Matroid.uniform(1, 2).canon()] == Fraction(2)
    assert mhall.hall_product(a, b) == {(a + b).canon(): Fraction(1)}
    assert mhall.structure_constant(b, a, Matroid.uniform(1, 2)) == 2


def test_minor_hopf():
    u12 = Matroid.uniform(1, 2)
    cop = mhall.mm_coproduct(u12)
    a = Matroid.fixture("a")
    b = Matroid.fixture("b")
    assert cop[(a.canon(), b.canon())] == Fraction(2)
    s = mhall.antipode(u12)
    assert s[u12.canon()] == Fraction(-1)
    assert s[(a + b).canon()] == Fraction(2)
    assert mhall.duality_check(u12)
    assert mhall.is_graphic(Matroid.uniform(2, 3))
    assert not mhall.is_graphic(Matroid.uniform(2, 4))


def test_strong_maps_and_axioms():
    u12 = Matroid.uniform(1, 2)
    aa = Matroid.free(2)
    assert not mhall.is_strong_map(u12, aa, {"*": "*", "1": "1", "2": "2"})
    assert mhall.is_strong_map(aa, u12, {"*": "*", "1": "1", "2": "2"})
    report = mhall.verify_axioms(2)
    assert report["ok"]
    assert report["prop4"][1] == 0
