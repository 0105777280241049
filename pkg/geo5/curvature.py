"""
Left-invariant Riemannian curvature from structure constants, for the metric
that makes the given basis orthonormal. Everything is exact over Q.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from geo5.exact import ZERO, Mat, Poly, charpoly, rational_roots
from geo5.liealg import LieAlgebra, ensure_valid


logger = logging.getLogger(__name__)

Gamma = tuple[tuple[tuple[Fraction, ...], ...], ...]


def levi_civita(L: LieAlgebra) -> Gamma:
    """
    gamma[i][j][k] = <nabla_{e_i} e_j, e_k> by the Koszul formula
    2<nabla_i e_j, e_k> = c_ij^k - c_jk^i + c_ki^j
    """
    ensure_valid(L)
    n, c = L.dim, L.c
    return tuple(
        tuple(
            tuple((c[i][j][k] - c[j][k][i] + c[k][i][j]) / 2 for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )


def nabla_matrices(gamma: Gamma) -> list[Mat]:
    """
    Matrix of nabla_{e_i}: column j holds nabla_{e_i} e_j
    """
    n = len(gamma)
    return [Mat.from_rows([[gamma[i][j][k] for j in range(n)] for k in range(n)]) for i in range(n)]


def curvature_operators(L: LieAlgebra, nabla: list[Mat]) -> dict[tuple[int, int], Mat]:
    """
    R(e_i, e_j) = [nabla_i, nabla_j] - nabla_{[e_i, e_j]} for all ordered pairs
    """
    n = L.dim
    ops = {}
    for i, j in itertools.product(range(n), repeat=2):
        R = nabla[i] @ nabla[j] - nabla[j] @ nabla[i]
        for k, q in enumerate(L.c[i][j]):
            if q:
                R = R - nabla[k].scale(q)
        ops[(i, j)] = R
    return ops


@dataclass(frozen=True)
class CurvatureChecks:
    metric_compatible: bool
    torsion_free: bool
    bianchi: bool
    scalar_is_ricci_trace: bool

    @property
    def ok(self) -> bool:
        return self.metric_compatible and self.torsion_free and self.bianchi and self.scalar_is_ricci_trace


@dataclass(frozen=True)
class CurvatureReport:
    dim: int
    gamma: Gamma
    sectional: dict[tuple[int, int], Fraction]
    ricci: Mat
    ricci_charpoly: Poly
    ricci_eigenvalues: tuple[Fraction, ...] | tuple[float, ...]
    ricci_exact: bool
    scalar: Fraction
    checks: CurvatureChecks

    def K(self, i: int, j: int) -> Fraction:
        if i == j:
            raise ValueError("sectional curvature needs two distinct basis vectors")
        return self.sectional[(min(i, j), max(i, j))]

    @property
    def flat(self) -> bool:
        return self.ricci.is_zero and all(v == 0 for v in self.sectional.values())


def _checks(L: LieAlgebra, gamma: Gamma, ops: dict[tuple[int, int], Mat], ricci: Mat, scalar: Fraction) -> CurvatureChecks:
    n = L.dim
    idx = range(n)
    metric = all(gamma[i][j][k] + gamma[i][k][j] == 0 for i in idx for j in idx for k in idx)
    torsion = all(gamma[i][j][k] - gamma[j][i][k] == L.c[i][j][k] for i in idx for j in idx for k in idx)
    bianchi = True
    for i, j, k in itertools.product(idx, repeat=3):
        total = [
            a + b + c
            for a, b, c in zip(ops[(i, j)].col(k), ops[(j, k)].col(i), ops[(k, i)].col(j))
        ]
        if any(total):
            bianchi = False
            break
    return CurvatureChecks(metric, torsion, bianchi, ricci.trace() == scalar)


def curvature_report(L: LieAlgebra) -> CurvatureReport:
    gamma = levi_civita(L)
    ops = curvature_operators(L, nabla_matrices(gamma))
    n = L.dim
    # K(e_i, e_j) = <R(e_i, e_j) e_j, e_i>
    sectional = {(i, j): ops[(i, j)][i, j] for i, j in itertools.combinations(range(n), 2)}
    # Ric(e_j, e_k) = sum_i <R(e_i, e_j) e_k, e_i>
    ricci = Mat.from_rows(
        [[sum((ops[(i, j)][i, k] for i in range(n)), ZERO) for k in range(n)] for j in range(n)]
    )
    scalar = sum((sectional[p] for p in sectional), ZERO) * 2
    p = charpoly(ricci)
    roots = rational_roots(p)
    if len(roots) == n:
        eigenvalues: tuple = tuple(sorted(roots, reverse=True))
        exact = True
    else:
        eigenvalues = tuple(float(v) for v in sorted(np.linalg.eigvalsh(ricci.to_numpy()), reverse=True))
        exact = False
    checks = _checks(L, gamma, ops, ricci, scalar)
    if not checks.ok:
        logger.warning("curvature identities failed for %s: %s", L.basis_names, checks)
    return CurvatureReport(n, gamma, sectional, ricci, p, eigenvalues, exact, scalar, checks)


def mixed_planes_flat(report: CurvatureReport, split: int) -> bool:
    """
    True when every plane spanned by e_i (i < split) and e_j (j >= split)
    has zero sectional curvature, as for a direct sum split at `split`
    """
    return all(report.K(i, j) == 0 for i in range(split) for j in range(split, report.dim))
