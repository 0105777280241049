"""
Group laws for the Lie-group geometries, in exponential-type coordinates.

Nilpotent groups use exponential coordinates with the Baker-Campbell-Hausdorff
product, which is a finite polynomial in dimension <= 5 and can run in exact
rational arithmetic. Solvable groups are modeled as N x| R^k with N the
nilradical in exponential coordinates and R^k acting by exp of the derivations.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from geo5.errors import ModelMismatch, NotAGroup, ShapeMismatch
from geo5.exact import ZERO, Subspace
from geo5.liealg import (
    LieAlgebra,
    ad,
    basis_vector,
    bracket,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    nilradical,
    restrict_to,
    subalgebra,
)


logger = logging.getLogger(__name__)

Scalar = float | Fraction


@dataclass(frozen=True)
class GroupElement:
    model: str
    coords: tuple[Scalar, ...]

    def to_numpy(self) -> np.ndarray:
        return np.array([float(a) for a in self.coords], dtype=float)


class _Model:
    name: str
    dim: int

    def _check(self, *elements: GroupElement) -> None:
        for g in elements:
            if g.model != self.name:
                raise ModelMismatch(f"element of {g.model!r} used in model {self.name!r}")
            if len(g.coords) != self.dim:
                raise ShapeMismatch(f"{len(g.coords)} coordinates in a {self.dim}-dimensional model")

    def element(self, coords: Sequence[Scalar]) -> GroupElement:
        g = GroupElement(self.name, tuple(coords))
        self._check(g)
        return g

    def identity(self) -> GroupElement:
        return GroupElement(self.name, (0.0,) * self.dim)

    def commutator(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        raise NotImplementedError

    def inv(self, g: GroupElement) -> GroupElement:
        raise NotImplementedError

    def exp(self, v: Sequence[Scalar]) -> GroupElement:
        raise NotImplementedError


class NilpotentModel(_Model):
    """
    Exponential coordinates; the product is BCH truncated after degree 4,
    which is exact for nilpotency class at most 4
    """

    def __init__(self, algebra: LieAlgebra, name: str = "nilpotent", exact: bool = False):
        if not is_nilpotent(algebra):
            raise ModelMismatch("BCH coordinates need a nilpotent algebra")
        if len(lower_central_series(algebra)) > 5:
            raise ModelMismatch("nilpotency class above 4 is beyond the truncated BCH product")
        self.algebra = algebra
        self.name = name
        self.dim = algebra.dim
        self.exact = exact
        self._c = np.array(
            [[[float(q) for q in row] for row in plane] for plane in algebra.c], dtype=float
        )

    def identity(self) -> GroupElement:
        zero = ZERO if self.exact else 0.0
        return GroupElement(self.name, (zero,) * self.dim)

    def _bracket(self, x, y):
        if self.exact:
            return bracket(self.algebra, x, y)
        return np.einsum("i,j,ijk->k", x, y, self._c)

    def bch(self, x, y):
        br = self._bracket
        xy = br(x, y)
        x_xy = br(x, xy)
        y_yx = br(y, br(y, x))
        y_x_xy = br(y, x_xy)
        if self.exact:
            return tuple(
                a + b + c / 2 + (d + e) / 12 - f / 24
                for a, b, c, d, e, f in zip(x, y, xy, x_xy, y_yx, y_x_xy)
            )
        return x + y + xy / 2 + (x_xy + y_yx) / 12 - y_x_xy / 24

    def _vec(self, g: GroupElement):
        if self.exact:
            return tuple(Fraction(a) for a in g.coords)
        return g.to_numpy()

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g, h)
        z = self.bch(self._vec(g), self._vec(h))
        return GroupElement(self.name, tuple(z) if self.exact else tuple(float(a) for a in z))

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        return GroupElement(self.name, tuple(-a for a in g.coords))

    def exp(self, v: Sequence[Scalar]) -> GroupElement:
        return self.element(tuple(Fraction(a) for a in v) if self.exact else tuple(float(a) for a in v))

    def log(self, g: GroupElement) -> tuple[Scalar, ...]:
        self._check(g)
        return g.coords


class SemidirectModel(_Model):
    """
    N x| R^k for an algebra whose nilradical is spanned by the first basis vectors
    and whose remaining basis vectors commute: (n, t)(n', t') = (n * e^{S(t)} n', t + t')
    with S(t) = sum_i t_i ad(f_i) restricted to N
    """

    def __init__(self, algebra: LieAlgebra, name: str = "semidirect"):
        if not is_solvable(algebra):
            raise ModelMismatch("semidirect coordinates need a solvable algebra")
        N, _ = nilradical(algebra)
        k = N.dim
        n = algebra.dim
        if N != Subspace.span(n, [basis_vector(n, i) for i in range(k)]):
            raise ModelMismatch("the nilradical is not spanned by the leading basis vectors")
        complement = [basis_vector(n, i) for i in range(k, n)]
        if any(any(bracket(algebra, a, b)) for a in complement for b in complement):
            raise ModelMismatch("the complement of the nilradical is not abelian")
        self.algebra = algebra
        self.name = name
        self.dim = n
        self.k = k
        self.normal = NilpotentModel(subalgebra(algebra, N), name=f"{name}/N")
        self._derivations = np.array([restrict_to(ad(algebra, f), N).to_numpy() for f in complement])

    def _split(self, g: GroupElement) -> tuple[np.ndarray, np.ndarray]:
        v = g.to_numpy()
        return v[:self.k], v[self.k:]

    def _action(self, t: np.ndarray) -> np.ndarray:
        return expm(np.tensordot(t, self._derivations, axes=1))

    def _pack(self, n: np.ndarray, t: np.ndarray) -> GroupElement:
        return GroupElement(self.name, tuple(float(a) for a in np.concatenate([n, t])))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g, h)
        n1, t1 = self._split(g)
        n2, t2 = self._split(h)
        return self._pack(self.normal.bch(n1, self._action(t1) @ n2), t1 + t2)

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        n, t = self._split(g)
        return self._pack(self._action(-t) @ (-n), -t)

    def exp(self, v: Sequence[Scalar]) -> GroupElement:
        """
        Exponential of an algebra element lying in N or in the complement; for an
        abelian N any element works, through the augmented-matrix formula
        """
        v = np.array([float(a) for a in v], dtype=float)
        if v.shape != (self.dim,):
            raise ShapeMismatch(f"vector of length {len(v)} in a {self.dim}-dimensional model")
        n, t = v[:self.k], v[self.k:]
        if not t.any():
            return self._pack(n, t)
        if not n.any():
            return self._pack(np.zeros(self.k), t)
        if self.normal.algebra.brackets():
            raise ModelMismatch("exp of mixed elements needs an abelian nilradical")
        S = np.tensordot(t, self._derivations, axes=1)
        aug = np.zeros((self.k + 1, self.k + 1))
        aug[:self.k, :self.k] = S
        aug[:self.k, self.k] = n
        return self._pack(expm(aug)[:self.k, self.k], t)

    def action(self, t: Sequence[float]) -> np.ndarray:
        return self._action(np.asarray(t, dtype=float))


def model_for(algebra: LieAlgebra, name: str = "model", exact: bool = False) -> _Model:
    if is_nilpotent(algebra):
        return NilpotentModel(algebra, name=name, exact=exact)
    if exact:
        raise ModelMismatch("exact arithmetic is only available for nilpotent models")
    return SemidirectModel(algebra, name=name)


def model_for_label(label: str, exact: bool = False) -> _Model:
    from geo5.atlas import build_algebra, find

    entry, _ = find(label)
    algebra = build_algebra(label)
    if not is_solvable(algebra):
        raise NotAGroup(f"{entry.name} has no global coordinate model (not solvable)")
    return model_for(algebra, name=entry.name, exact=exact)


# Heisenberg groups

def _two_step(model: _Model) -> NilpotentModel:
    if not isinstance(model, NilpotentModel) or len(lower_central_series(model.algebra)) > 3:
        raise ModelMismatch("closed-form exp needs a 2-step nilpotent model")
    return model


def heis_model(dim: int = 3, exact: bool = False) -> NilpotentModel:
    """
    Heis_3 with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy'-x'y), or Heis_5
    """
    from geo5.atlas import heis3, heis5

    if dim == 3:
        return NilpotentModel(heis3(), name="Heis_3", exact=exact)
    if dim == 5:
        return NilpotentModel(heis5(), name="Heis_5", exact=exact)
    raise ShapeMismatch(f"no Heisenberg model of dimension {dim}")


def heis_exp(model: NilpotentModel, v: Sequence[Scalar]) -> GroupElement:
    return _two_step(model).exp(v)


def heis_log(model: NilpotentModel, g: GroupElement) -> tuple[Scalar, ...]:
    return _two_step(model).log(g)


# Consistency with the structure constants

def commutator_derivative_check(model: _Model, algebra: LieAlgebra, h: float = 1e-4) -> float:
    """
    Max relative deviation between the second-order part of the group commutator
    of exp(h e_i), exp(h e_j) and the bracket [e_i, e_j]; the odd orders cancel
    in the average over h and -h
    """
    if model.dim != algebra.dim:
        raise ShapeMismatch("model and algebra dimensions differ")
    n = algebra.dim
    worst = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            estimates = []
            for step in (h, -h):
                g = model.exp([step if k == i else 0.0 for k in range(n)])
                k_ = model.exp([step if k == j else 0.0 for k in range(n)])
                estimates.append(model.commutator(g, k_).to_numpy())
            estimate = (estimates[0] + estimates[1]) / (2 * h * h)
            br = np.array([float(q) for q in algebra.c[i][j]])
            err = float(np.max(np.abs(estimate - br))) / max(1.0, float(np.max(np.abs(br))))
            worst = max(worst, err)
    logger.debug("commutator check for %s: %.3g", model.name, worst)
    return worst
