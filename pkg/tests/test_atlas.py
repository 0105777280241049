from collections import Counter

import pytest

from geo5.atlas import (
    ISOTROPY_TABLE,
    KEY_LEAVES,
    build_algebra,
    catalog,
    category_counts,
    counts,
    enumerate_products,
    find,
    list_entries,
    metadata,
)
from geo5.errors import InvalidParameter, NotAGroup, UnknownLabel
from geo5.labels import Sol5Diag
from geo5.liealg import ad, basis_vector, center, is_unimodular, validate


def test_counts():
    assert counts() == (53, 6)
    assert len(catalog()) == 59


def test_category_counts():
    assert category_counts() == {
        1: (3, 0), 2: (2, 0), 3: (3, 0), 4: (2, 3),
        5: (3, 0), 6: (6, 0), 7: (6, 2), 8: (28, 1),
    }


def test_filters():
    assert {e.name for e in list_entries(category=1)} == {"E^5", "S^5", "H^5"}
    assert {e.name for e in list_entries(stabilizer="SO(3)_5")} == {"SL(3,R)/SO(3)", "SU(3)/SO(3)"}
    with pytest.raises(UnknownLabel):
        list_entries(category=9)


def test_products():
    products = enumerate_products()
    assert len(products) == 29
    assert len({p.name for p in products}) == 29
    assert Counter(p.shape for p in products) == {"4x1": 9, "3x2": 17, "2x2x1": 3}
    assert "E^3 x E^2" not in {p.name for p in products}


def test_product_stabilizers_are_from_the_product_list():
    allowed = {"SO(4)", "U(2)", "SO(3)xSO(2)", "SO(3)", "SO(2)xSO(2)", "SO(2)", "1"}
    assert {p.stabilizer for p in enumerate_products()} <= allowed
    for entry in catalog():
        if entry.stabilizer in ("SO(4)", "SO(3)xSO(2)"):
            assert entry.is_product


def test_every_constructed_algebra_is_valid_and_unimodular():
    for entry in catalog():
        if entry.is_lie_group:
            L = build_algebra(entry.name)
            assert L.dim == 5
            assert validate(L).ok, entry.name
            assert is_unimodular(L), entry.name


def test_heis5():
    L = build_algebra("Heis_5")
    assert L.brackets() == {(0, 1): {4: 1}, (2, 3): {4: 1}}
    assert center(L).dim == 1
    assert find("A5,4")[0].name == "Heis_5"


def test_a533_torus():
    L = build_algebra("R^3 ⋊ {xyz=1}^0")
    D1 = ad(L, basis_vector(5, 3))
    D2 = ad(L, basis_vector(5, 4))
    assert D1 @ D2 == D2 @ D1
    assert [D1[i, i] for i in range(3)] == [1, -1, 0]
    assert [D2[i, i] for i in range(3)] == [0, 1, -1]



def test_family_constructor_uses_parameters():
    L = build_algebra(Sol5Diag(roots=("1", "1/2", "-1/2", "-1")))
    A = ad(L, basis_vector(5, 4))
    assert [A[i, i] for i in range(4)] == [1, 1/2, -1/2, -1]
    with pytest.raises(InvalidParameter):
        build_algebra(Sol5Diag(roots=("1", "1", "1", "1")))


def test_non_groups():
    with pytest.raises(NotAGroup):
        build_algebra("S^5")
    with pytest.raises(UnknownLabel):
        find("not a geometry")


def test_metadata():
    assert metadata("~SL_2 x_{3/4} S^3").compact_quotients is True
    heis = metadata("Heis_5")
    assert heis.stabilizer == "U(2)"
    assert (heis.isotropy_row.base, heis.isotropy_row.column) == ("C^2", "curved")
    assert metadata("F^5_0").stabilizer == "S1_{1/2}"
    assert metadata("F^5_1").stabilizer_dim == 1


def test_key_leaves_are_catalog_groups():
    assert len(KEY_LEAVES) == 10
    for leaf in KEY_LEAVES:
        assert find(leaf)[0].is_lie_group


def test_isotropy_table_matches_catalog():
    for base, (flat, curved) in ISOTROPY_TABLE.items():
        for name, column in ((flat, "flat"), (curved, "curved")):
            if name is None or name.startswith("non-maximal"):
                continue
            row = metadata(name).isotropy_row
            assert (row.base, row.column) == (base, column)
