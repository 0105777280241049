from fractions import Fraction

import numpy as np
import pytest

from geo5.atlas import a52, aff_x_r3, build_algebra, catalog
from geo5.errors import ModelMismatch, NotAGroup, ShapeMismatch
from geo5.groups import (
    NilpotentModel,
    SemidirectModel,
    commutator_derivative_check,
    heis_exp,
    heis_log,
    heis_model,
    model_for,
    model_for_label,
)
from geo5.liealg import is_solvable


SOLVABLE_GROUPS = [
    entry.name for entry in catalog()
    if entry.is_lie_group and is_solvable(build_algebra(entry.name))
]


def _random_element(model, rng, scale=0.3):
    return model.element(rng.uniform(-scale, scale, size=model.dim).tolist())


def test_heisenberg_law_is_exact():
    H = heis_model(3, exact=True)
    g = H.element((Fraction(1), Fraction(2), Fraction(3)))
    k = H.element((Fraction(-1, 2), Fraction(5), Fraction(1)))
    x, y, z = g.coords
    x2, y2, z2 = k.coords
    assert H.mul(g, k).coords == (x + x2, y + y2, z + z2 + x * y2 - x2 * y)
    assert H.mul(g, H.inv(g)) == H.identity()


def test_heis_exp_and_log():
    H = heis_model(5)
    v = (0.1, -0.2, 0.3, 0.4, 0.5)
    assert heis_log(H, heis_exp(H, v)) == v
    with pytest.raises(ModelMismatch):
        heis_exp(NilpotentModel(a52()), v)
    with pytest.raises(ShapeMismatch):
        heis_model(4)


@pytest.mark.parametrize("name", SOLVABLE_GROUPS)
def test_associativity(name, rng):
    model = model_for_label(name)
    for _ in range(5):
        a, b, c = (_random_element(model, rng) for _ in range(3))
        left = model.mul(model.mul(a, b), c).to_numpy()
        right = model.mul(a, model.mul(b, c)).to_numpy()
        assert np.allclose(left, right, rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize("name", SOLVABLE_GROUPS)
def test_inverse(name, rng):
    model = model_for_label(name)
    g = _random_element(model, rng)
    assert np.allclose(model.mul(g, model.inv(g)).to_numpy(), 0.0, atol=1e-10)


def test_exact_nilpotent_associativity():
    model = model_for_label("A5,6", exact=True)
    a = model.element([Fraction(k, 3) for k in (1, -2, 4, 0, 5)])
    b = model.element([Fraction(k, 7) for k in (3, 1, -1, 2, 2)])
    c = model.element([Fraction(k, 2) for k in (-1, 0, 1, 1, -3)])
    assert model.mul(model.mul(a, b), c) == model.mul(a, model.mul(b, c))


@pytest.mark.parametrize("name", SOLVABLE_GROUPS)
def test_commutators_recover_the_brackets(name):
    model = model_for_label(name)
    assert commutator_derivative_check(model, build_algebra(name)) < 1e-6


def test_one_parameter_subgroup_with_abelian_nilradical():
    model = model_for_label("A5,33^{-1,-1}")
    assert isinstance(model, SemidirectModel)
    v = np.array([0.3, -0.1, 0.2, 0.5, -0.4])
    twice = model.exp(2 * v).to_numpy()
    squared = model.mul(model.exp(v), model.exp(v)).to_numpy()
    assert np.allclose(twice, squared, atol=1e-12)


def test_mixed_exp_needs_abelian_nilradical():
    model = model_for_label("A5,20^0")
    with pytest.raises(ModelMismatch):
        model.exp([1.0, 0.0, 0.0, 0.0, 1.0])


def test_model_errors():
    with pytest.raises(NotAGroup):
        model_for_label("S^3 x E^2")
    with pytest.raises(NotAGroup):
        model_for_label("S^5")
    with pytest.raises(ModelMismatch):
        SemidirectModel(aff_x_r3())
    with pytest.raises(ModelMismatch):
        model_for(build_algebra("A5,15^{-1}"), exact=True)
    heis = heis_model(5)
    other = model_for_label("A5,6")
    with pytest.raises(ModelMismatch):
        heis.mul(heis.identity(), other.identity())
    with pytest.raises(ShapeMismatch):
        heis.element((1.0, 2.0))
