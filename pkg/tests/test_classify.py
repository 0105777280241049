import pytest

from geo5.atlas import KEY_LEAVES, a51, a53, a57_complex, a59, abelian5, aff_x_r3, build_algebra, heis5, r4_semidirect, sol4mn_x_e
from geo5.classify import (
    LEAF_FAMILY,
    _complex_family,
    Classification,
    NotInKey,
    classify_solvable5,
    family_params,
    fingerprint,
    invariance_check,
    nilradical_type,
    reference_fingerprint,
)
from geo5.errors import InvalidParameter, NotSolvable, WrongBranch, WrongDimension
from geo5.exact import Mat, parse_poly
from geo5.labels import Named, Sol4mnxE, Sol5Complex, Sol5Diag
from geo5.liealg import LieAlgebra, basis_change


@pytest.mark.parametrize("leaf", KEY_LEAVES)
def test_reference_algebras_reach_their_leaf(leaf):
    result = classify_solvable5(build_algebra(leaf))
    assert isinstance(result, Classification)
    assert result.leaf == leaf
    assert result.trace[0].question == "nilpotent"


def test_nilpotent_branch_trace():
    result = classify_solvable5(build_algebra("A5,2"))
    assert [(s.question, s.answer) for s in result.trace] == [
        ("nilpotent", "yes"),
        ("4-D abelian ideal", "yes"),
        ("g^4 != 0", "yes"),
    ]
    assert result.label == Named(name="A5,2")
    assert result.status == "certified"


def test_center_dimension_splits_the_heisenberg_nilradical():
    assert classify_solvable5(build_algebra("A5,20^0")).trace[-1].answer == "1"
    assert classify_solvable5(build_algebra("Sol^4_1 x E")).trace[-1].answer == "2"


def test_nilradical_types():
    assert nilradical_type(build_algebra("A5,33^{-1,-1}")) == "R^3"
    assert nilradical_type(build_algebra("A5,15^{-1}")) == "R^4"
    assert nilradical_type(build_algebra("A5,20^0")) == "R+n3"


@pytest.mark.parametrize("builder", [heis5, abelian5, a51, a53, a59, aff_x_r3])
def test_algebras_outside_the_key(builder):
    result = classify_solvable5(builder())
    assert isinstance(result, NotInKey)
    assert result.reason


def test_four_block_leaf_gives_normalized_roots():
    result = classify_solvable5(build_algebra(LEAF_FAMILY))
    assert result.label == Sol5Diag(roots=("1", "2/3", "1/3", "-2"))
    assert result.trace[-1].question == "root data"


def test_root_normalization_ignores_scale():
    scaled = r4_semidirect(Mat.diag([2, 4, 6, -12]))
    assert family_params(scaled) == Sol5Diag(roots=("1", "2/3", "1/3", "-2"))
    flipped = r4_semidirect(Mat.diag([-1, -2, -3, 6]))
    assert family_params(flipped) == Sol5Diag(roots=("1", "2/3", "1/3", "-2"))


def test_family_params_sub_labels():
    assert family_params(a57_complex()) == Sol5Complex(
        real_roots=("1", "-1"), complex_real_part="0", complex_imag_part="1"
    )
    assert family_params(sol4mn_x_e()) == Sol4mnxE(roots=("1", "1/2", "-3/2"))
    assert family_params(build_algebra("A5,7^{1,-1,-1}")) == Named(name="A5,7^{1,-1,-1}")
    assert family_params(build_algebra("Sol^4_0 x E")) == Named(name="Sol^4_0 x E")
    assert family_params(build_algebra("Sol^3 x E^2")) == Named(name="Sol^3 x E^2")
    with pytest.raises(WrongBranch):
        family_params(build_algebra("A5,15^{-1}"))


def test_probe_based_nilradical_is_unverified():
    result = classify_solvable5(build_algebra("Sol^3 x E^2"))
    assert isinstance(result, Classification)
    assert result.label == Named(name="Sol^3 x E^2")
    assert result.status == "unverified"


def test_fingerprint_is_basis_independent(random_basis):
    L = build_algebra("A5,20^0")
    P = random_basis(5)
    assert fingerprint(basis_change(L, P)).matches(reference_fingerprint("A5,20^0"))


@pytest.mark.parametrize("leaf", KEY_LEAVES)
def test_invariance_under_conjugation(leaf, rng):
    report = invariance_check(build_algebra(leaf), trials=100, rng=rng)
    assert report.trials == 100
    assert report.mismatches == 0, report.first_mismatch


def test_input_errors():
    with pytest.raises(WrongDimension):
        classify_solvable5(LieAlgebra.abelian(4))
    with pytest.raises(NotSolvable):
        classify_solvable5(build_algebra("S^3 x E^2"))


def test_complex_family_needs_a_complex_pair():
    with pytest.raises(InvalidParameter):
        _complex_family(parse_poly("x^4 - 5x^2 + 6"))
