from fractions import Fraction

import pytest

from geo5.atlas import a52, a533, a57_diag, aff_x_r3, heis3, heis5, sol3_x_e2
from geo5.errors import InvalidAlgebra, NotSolvable, WrongBranch, WrongDimension
from geo5.exact import Mat, Subspace
from geo5.liealg import (
    LieAlgebra,
    ad,
    basis_change,
    basis_vector,
    bracket,
    center,
    direct_sum,
    ensure_valid,
    has_abelian_ideal_dim4,
    killing_form,
    lower_central_series,
    nilradical,
    structure_report,
    subalgebra,
    upper_central_series,
    validate,
)


def sol3() -> LieAlgebra:
    # [e3, e1] = e1, [e3, e2] = -e2
    return LieAlgebra.from_brackets(3, {(2, 0): {0: 1}, (2, 1): {1: -1}})


def dims(series) -> tuple[int, ...]:
    return tuple(s.dim for s in series)


def test_from_brackets_fills_antisymmetry():
    L = heis3()
    assert L.c[0][1][2] == 2
    assert L.c[1][0][2] == -2
    assert L.brackets() == {(0, 1): {2: Fraction(2)}}


def test_validate_ok():
    assert validate(LieAlgebra.abelian(5)).ok
    assert validate(heis3()).ok


def test_validate_reports_jacobi_violation():
    L = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    report = validate(L)
    assert not report.ok
    assert report.kind == "jacobi"
    assert report.indices[:3] == (0, 1, 2)
    with pytest.raises(InvalidAlgebra):
        ensure_valid(L)


def test_ad():
    assert ad(LieAlgebra.abelian(5), basis_vector(5, 2)).is_zero
    A = ad(heis3(), basis_vector(3, 0))
    assert A == Mat.from_rows([[0, 0, 0], [0, 0, 0], [0, 2, 0]])
    assert ad(sol3(), basis_vector(3, 2)) == Mat.diag([1, -1, 0])


def test_lower_central_series():
    assert dims(lower_central_series(heis3())) == (3, 1, 0)
    assert dims(lower_central_series(a52())) == (5, 3, 2, 1, 0)
    assert dims(lower_central_series(LieAlgebra.abelian(5))) == (5, 0)


def test_center():
    Z = center(heis5())
    assert Z.dim == 1
    assert Z.contains(basis_vector(5, 4))
    assert center(LieAlgebra.abelian(5)).dim == 5
    assert center(sol3_x_e2()).dim == 2


def test_upper_central_series():
    assert dims(upper_central_series(a52())) == (0, 1, 2, 3, 5)


def test_structure_report():
    report = structure_report(a533())
    assert report.solvable and not report.nilpotent and report.unimodular
    report = structure_report(aff_x_r3())
    assert report.solvable and not report.unimodular
    report = structure_report(heis5())
    assert report.nilpotent and report.unimodular


def test_nilradical():
    N, status = nilradical(a57_diag())
    assert status == "certified"
    assert N == Subspace.span(5, [basis_vector(5, i) for i in range(4)])
    N, status = nilradical(a533())
    assert (N.dim, status) == (3, "certified")
    N, status = nilradical(heis5())
    assert N.dim == 5


def test_nilradical_rejects_non_solvable():
    from geo5.atlas import su2_x_e2

    with pytest.raises(NotSolvable):
        nilradical(su2_x_e2())


def test_has_abelian_ideal_dim4():
    assert has_abelian_ideal_dim4(a52())
    assert not has_abelian_ideal_dim4(heis5())
    assert has_abelian_ideal_dim4(LieAlgebra.abelian(5))
    with pytest.raises(WrongBranch):
        has_abelian_ideal_dim4(a57_diag())
    with pytest.raises(WrongDimension):
        has_abelian_ideal_dim4(heis3())


def test_basis_change_identity_and_swap():
    L = heis3()
    assert basis_change(L, Mat.identity(3), L.basis_names) == L
    swapped = basis_change(L, Mat.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    assert swapped.c[0][1][2] == -2


def test_basis_change_preserves_structure(random_basis):
    L = a57_diag()
    for _ in range(3):
        M = basis_change(L, random_basis(5))
        assert validate(M).ok
        assert structure_report(M) == structure_report(L)
        assert nilradical(M)[0].dim == 4


def test_killing_form():
    assert killing_form(LieAlgebra.abelian(5)).is_zero
    assert killing_form(heis5()).is_zero
    assert not killing_form(sol3()).is_zero


def test_direct_sum_and_subalgebra():
    L = direct_sum(sol3(), LieAlgebra.abelian(2))
    assert L.dim == 5
    assert center(L).dim == 2
    S = Subspace.span(5, [basis_vector(5, i) for i in range(3)])
    assert subalgebra(L, S).c == sol3().c
    assert bracket(L, basis_vector(5, 2), basis_vector(5, 0)) == (1, 0, 0, 0, 0)
