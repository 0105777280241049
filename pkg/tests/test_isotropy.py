import itertools

import pytest

from geo5.atlas import catalog
from geo5.errors import UnknownStabilizer
from geo5.isotropy import NODES, contains, dims, geometries_with_stabilizer, parse_stabilizer


def test_contains_examples():
    assert contains("SO(5)", "SU(2)")
    assert not contains("SO(3)_5", "SO(3)")
    assert contains("U(2)", "U(2)")
    assert contains("SO(3)xSO(2)", "SO(2)")
    assert not contains("SU(2)", "SO(2)")


def test_poset_axioms():
    keys = list(NODES)
    for a in keys:
        assert contains(a, a)
    for a, b in itertools.permutations(keys, 2):
        if contains(a, b):
            assert not contains(b, a)
            assert NODES[a] >= NODES[b]
    for a, b, c in itertools.permutations(keys, 3):
        if contains(a, b) and contains(b, c):
            assert contains(a, c)


def test_dims():
    d = dims()
    assert d["SO(5)"] == 10
    assert d["U(2)"] == 4
    assert d["S1_{1/2}"] == 1
    assert d["1"] == 0


def test_circle_normalization():
    assert parse_stabilizer("S1_{2/3}") == parse_stabilizer("S1_{3/2}")
    assert str(parse_stabilizer("S1_{0}")) == "SO(2)"
    assert str(parse_stabilizer("S1_{2/4}")) == "S1_{1/2}"
    assert contains("SO(2)xSO(2)", "S1_{2/3}")
    assert not contains("S1_{2/3}", "S1_{1/3}")


def test_unknown_stabilizer():
    with pytest.raises(UnknownStabilizer):
        parse_stabilizer("SO(7)")


def test_geometries_with_stabilizer():
    assert set(geometries_with_stabilizer("U(2)")) == {"Heis_5", "~U(2,1)/U(2)"}
    assert geometries_with_stabilizer("SU(2)") == []
    assert set(geometries_with_stabilizer("SO(5)")) == {"E^5", "S^5", "H^5"}


def test_every_catalog_stabilizer_is_a_node():
    for entry in catalog():
        parse_stabilizer(entry.stabilizer)
