import math
from fractions import Fraction

import numpy as np
import pytest

from geo5.errors import DegenerateInput, EndpointRoot, InputFormatError, ShapeMismatch, SingularMatrix
from geo5.exact import (
    Mat,
    Poly,
    Subspace,
    charpoly,
    format_rat,
    inertia,
    interpolate,
    jordan_block_count,
    kernel,
    multiplicity_pattern,
    parse_poly,
    parse_rat,
    random_invertible,
    rational_roots,
    root_signature,
    squarefree_part,
    sturm_count,
)


X = Poly.x()
HEPTAGON = parse_poly("x^3 + x^2 - 2x - 1")


def test_parse_and_format_rationals():
    assert parse_rat("-6/4") == Fraction(-3, 2)
    assert format_rat(Fraction(-3, 2)) == "-3/2"
    assert format_rat(Fraction(4, 2)) == "2"
    with pytest.raises(InputFormatError):
        parse_rat("0.5")
    with pytest.raises(InputFormatError):
        parse_rat("1/0")


def test_parse_poly_and_str():
    assert HEPTAGON == Poly((-1, -2, 1, 1))
    assert str(HEPTAGON) == "x^3 + x^2 - 2*x - 1"
    assert parse_poly("2x - 3") == Poly((-3, 2))
    with pytest.raises(InputFormatError):
        parse_poly("x^3 + sqrt(2)")
    with pytest.raises(InputFormatError):
        parse_poly("x^3 +")


def test_poly_arithmetic():
    p = (X - Poly.constant(1)) * (X + Poly.constant(2))
    assert p == Poly((-2, 1, 1))
    q, r = p.divmod(X - Poly.constant(1))
    assert q == X + Poly.constant(2)
    assert r.is_zero
    assert p.derivative() == Poly((1, 2))
    assert p(Fraction(1)) == 0


@pytest.mark.parametrize(
    "p, expected",
    [
        (Poly.from_roots([0, 0, 0, 0]), X),
        (Poly.from_roots([1, 1, -1, -1]), Poly((-1, 0, 1))),
        (Poly((1, 0, 1)), Poly((1, 0, 1))),
    ],
)
def test_squarefree_part(p, expected):
    assert squarefree_part(p) == expected


def test_squarefree_part_of_zero():
    with pytest.raises(DegenerateInput):
        squarefree_part(Poly(()))


def test_multiplicity_pattern():
    assert multiplicity_pattern(Poly.from_roots([1, 1, 1, 2, 3, 3])) == (3, 2, 1)
    assert multiplicity_pattern(Poly((1, 0, 1)) * Poly((1, 0, 1))) == (2, 2)


def test_sturm_count():
    assert sturm_count(HEPTAGON) == 3
    assert sturm_count(Poly((1, 0, 1))) == 0
    assert sturm_count(parse_poly("x^3 - 6x^2 + 5x - 1"), 0, math.inf) == 3
    assert sturm_count(HEPTAGON, 0, 2) == 1


def test_sturm_count_endpoint_root():
    with pytest.raises(EndpointRoot):
        sturm_count(Poly.from_roots([1, 2]), 1, 3)


def test_sturm_count_matches_numpy():
    for coeffs in ([-1, 5, -6, 1], [3, -4, 0, 1], [2, 0, 0, 1], [1, -7, 0, 2, 1]):
        p = Poly(tuple(coeffs))
        roots = np.roots(list(reversed(coeffs)))
        assert sturm_count(p) == sum(abs(r.imag) < 1e-9 for r in roots)


def test_sturm_count_matches_companion_eigenvalues(rng):
    for _ in range(500):
        degree = int(rng.integers(0, 6))
        coeffs = rng.integers(-9, 10, size=degree + 1).tolist()
        while coeffs[-1] == 0:
            coeffs[-1] = int(rng.integers(-9, 10))
        s = squarefree_part(Poly(tuple(coeffs)))
        roots = np.roots([float(a) for a in reversed(s.coeffs)])
        assert sturm_count(s) == sum(abs(r.imag) <= 1e-9 for r in roots), coeffs


def test_root_signature():
    sig = root_signature(Poly.from_roots([1, 2, 3, -6]))
    assert (sig.distinct, sig.real, sig.complex_pairs, sig.zero_mult, sig.all_real) == (4, 4, 0, 0, True)
    sig = root_signature(Poly((1, 0, 1)) * Poly.from_roots([1, -2]))
    assert (sig.distinct, sig.real, sig.complex_pairs, sig.all_real) == (4, 2, 1, False)
    sig = root_signature(Poly.from_roots([0, 0, 1, -1]))
    assert (sig.distinct, sig.real, sig.zero_mult) == (3, 3, 2)


def test_rational_roots():
    assert rational_roots(Poly((-1, 0, 1))) == [-1, 1]
    assert rational_roots(Poly((-3, 2))) == [Fraction(3, 2)]
    assert rational_roots(Poly((1, 0, 1))) == []
    assert rational_roots(HEPTAGON) == []


def test_interpolate():
    p = Poly((5, -1, 0, 2))
    xs = [Fraction(k) for k in range(4)]
    assert interpolate(xs, [p(x) for x in xs]) == p


def test_charpoly():
    assert charpoly(Mat.identity(3)) == Poly.from_roots([1, 1, 1])
    assert charpoly(HEPTAGON.companion()) == HEPTAGON
    assert charpoly(Mat.diag([1, 2, 3, -6])) == Poly.from_roots([1, 2, 3, -6])
    with pytest.raises(ShapeMismatch):
        charpoly(Mat.zeros(2, 3))


def test_companion_determinant():
    for p in (HEPTAGON, parse_poly("x^3 - 6x^2 + 5x - 1"), parse_poly("x^4 - 3x^3 + x^2 + 2x + 1")):
        M = p.companion()
        assert M.det() == (-1) ** p.degree * p.coeffs[0]


def test_kernel_and_rank():
    assert kernel(Mat.zeros(2)).dim == 2
    assert kernel(Mat.identity(3)).dim == 0
    K = kernel(Mat.from_rows([[1, 2], [2, 4]]))
    assert K.dim == 1
    assert K.contains((-2, 1))
    assert Mat.from_rows([[1, 2], [2, 4]]).rank() == 1


def test_inverse():
    M = Mat.from_rows([[2, 1], [1, 1]])
    assert M @ M.inverse() == Mat.identity(2)
    with pytest.raises(SingularMatrix):
        Mat.from_rows([[1, 2], [2, 4]]).inverse()


def test_jordan_block_count():
    assert jordan_block_count(Mat.identity(4)) == 4
    assert jordan_block_count(Poly.from_roots([0, 0, 0, 0]).companion()) == 1
    J = Mat.from_rows([[1, 1], [0, 1]])
    K = Mat.from_rows([[-1, 1], [0, -1]])
    assert jordan_block_count(Mat.block_diag(J, K)) == 2


def test_jordan_block_count_is_similarity_invariant(random_basis):
    M = Mat.block_diag(Mat.from_rows([[2, 1], [0, 2]]), Mat.diag([2, -1]))
    for _ in range(5):
        P = random_basis(4)
        assert jordan_block_count(P.inverse() @ M @ P) == 3


def _jordan_block(eigenvalue: int, size: int) -> Mat:
    return Mat.from_rows([
        [eigenvalue if i == j else 1 if j == i + 1 else 0 for j in range(size)]
        for i in range(size)
    ])


def test_jordan_block_count_on_conjugated_jordan_forms(rng):
    for _ in range(200):
        n = int(rng.integers(1, 6))
        sizes = []
        while sum(sizes) < n:
            sizes.append(int(rng.integers(1, n - sum(sizes) + 1)))
        J = Mat.block_diag(*(_jordan_block(int(rng.choice([-2, -1, 0, 1, 2])), k) for k in sizes))
        P = random_invertible(rng, n)
        assert jordan_block_count(P @ J @ P.inverse()) == len(sizes), (sizes, J)


def test_inertia():
    assert inertia(Mat.diag([1, -2, 0, 3])) == (2, 1, 1)
    assert inertia(Mat.from_rows([[0, 1], [1, 0]])) == (1, 1, 0)


def test_subspace_operations():
    a = Subspace.span(3, [(1, 0, 0), (0, 1, 0)])
    b = Subspace.span(3, [(0, 1, 0), (0, 0, 1)])
    assert a.intersection(b) == Subspace.span(3, [(0, 1, 0)])
    assert (a + b).dim == 3
    assert Subspace.span(3, [(2, 4, 0), (1, 1, 0)]) == a
    with pytest.raises(ShapeMismatch):
        a.coordinates((0, 0, 1))
