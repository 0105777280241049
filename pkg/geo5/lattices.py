"""
Lattice checks that fit on a desk: unit cubics, the Dirichlet-unit lattice in
R^3 x| {xyz=1}^0, integer characteristic-polynomial searches for the
R^4 x| R families, and the rationality predicate for ~SL_2 x_alpha S^3.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from geo5 import config
from geo5.errors import (
    IllConditioned,
    InvalidParameter,
    MalformedTarget,
    PolynomialRejected,
)
from geo5.exact import Mat, Poly, poly_gcd, rational_roots, root_signature, sturm_count
from geo5.groups import SemidirectModel
from geo5.labels import GeometryLabel, SL2xS3, Sol4mnxE, Sol5Diag


logger = logging.getLogger(__name__)

LOG_TOLERANCE = 1e-9
RESIDUAL_TOLERANCE = 1e-9
MAX_CONDITION = 1e8
DISPLACEMENT_THRESHOLD = 1e-6
WORD_LENGTH = 4


# Unit cubics

@dataclass(frozen=True)
class UnitCubic:
    poly: Poly

    @property
    def companion(self) -> Mat:
        return self.poly.companion()


def unit_cubic_check(p: Poly) -> UnitCubic:
    """
    Accepts a monic integer cubic whose root is a unit generating a totally real
    cubic field; otherwise raises PolynomialRejected naming every failed check
    """
    if p.degree != 3 or p.lead != 1 or any(a.denominator != 1 for a in p.coeffs):
        raise PolynomialRejected(["not a monic integer cubic"])
    reasons = []
    squarefree = poly_gcd(p, p.derivative()).degree == 0
    if sturm_count(p) != 3:
        reasons.append("not totally real")
    if not squarefree:
        reasons.append("repeated roots")
    if rational_roots(p):
        reasons.append("reducible over Q")
    if abs(p.coeffs[0]) != 1:
        reasons.append("constant term is not +-1")
    if reasons:
        logger.debug("rejected %s: %s", p, reasons)
        raise PolynomialRejected(reasons)
    return UnitCubic(p)


# Dirichlet lattice in R^3 x| {xyz=1}^0

def _unit_group_model() -> SemidirectModel:
    from geo5.atlas import a533

    return SemidirectModel(a533(), name="A5,33^{-1,-1}")


@dataclass
class LatticeReport:
    cubic: UnitCubic
    companion: Mat
    det: Fraction
    eigenvalues: list[float]
    eigenvalue_product: float
    log_sum: float
    squared: bool
    unit: Mat
    embedding: np.ndarray
    condition: float
    translations: list[tuple[float, ...]]
    torus: tuple[float, float]
    log_roots: list[float]
    relation_residual: float
    min_displacement: float
    words_checked: int
    warnings: list[str] = field(default_factory=list)

    @property
    def discrete(self) -> bool:
        return self.min_displacement > DISPLACEMENT_THRESHOLD

    @property
    def verified(self) -> bool:
        return self.relation_residual < RESIDUAL_TOLERANCE and self.discrete


def _int_matrix(M: Mat) -> np.ndarray:
    return np.array([[int(a) for a in row] for row in M.to_rows()], dtype=np.int64)


def _words(unit: Mat, length: int) -> set[tuple[tuple[int, ...], int]]:
    """
    Elements of Z^3 x|_u Z reached by words of at most `length` generators,
    in exact integer arithmetic: (x, k)(x', k') = (x + u^k x', k + k')
    """
    inverse = unit.inverse()
    powers = {0: np.eye(3, dtype=np.int64)}
    for k in range(1, length + 1):
        powers[k] = _int_matrix(unit.power(k))
        powers[-k] = _int_matrix(inverse.power(k))
    gens = []
    for i in range(3):
        for s in (1, -1):
            v = [0, 0, 0]
            v[i] = s
            gens.append((tuple(v), 0))
    gens += [((0, 0, 0), 1), ((0, 0, 0), -1)]
    seen = {((0, 0, 0), 0)}
    frontier = set(seen)
    for _ in range(length):
        nxt = set()
        for x, k in frontier:
            for y, j in gens:
                z = tuple(int(a) for a in np.array(x) + powers[k] @ np.array(y))
                nxt.add((z, k + j))
        frontier = nxt - seen
        seen |= nxt
    return seen


def dirichlet_lattice(cubic: UnitCubic | Poly) -> LatticeReport:
    """
    Gamma = Z^3 x|_u Z inside R^3 x| {xyz=1}^0, with u the companion matrix of
    the cubic (its square when some eigenvalue is negative). The eigenvector
    embedding E conjugates u to diag(lambda), so Z^3 goes to E Z^3 and the
    generator of Z goes to the torus element with entries log(lambda)
    """
    if isinstance(cubic, Poly):
        cubic = unit_cubic_check(cubic)
    M = cubic.companion
    det = M.det()
    eigenvalues = sorted((float(v.real) for v in np.linalg.eigvals(M.to_numpy())), reverse=True)
    squared = any(v < 0 for v in eigenvalues)
    unit = M @ M if squared else M

    values, vectors = np.linalg.eig(unit.to_numpy())
    order = np.argsort(-values.real)
    values, vectors = values.real[order], vectors.real[:, order]
    condition = float(np.linalg.cond(vectors))
    if condition > MAX_CONDITION:
        raise IllConditioned(f"eigenbasis condition number {condition:.3g} exceeds {MAX_CONDITION:g}")
    E = np.linalg.inv(vectors)
    logs = np.log(values)
    torus = (float(logs[0]), float(-logs[2]))

    model = _unit_group_model()
    b = model.element((0.0, 0.0, 0.0, *torus))
    b_inv = model.inv(b)
    U = _int_matrix(unit)
    residual = 0.0
    translations = []
    for k in range(3):
        a = model.element((*E[:, k], 0.0, 0.0))
        translations.append(tuple(float(v) for v in a.coords[:3]))
        conj = model.mul(model.mul(b, a), b_inv).to_numpy()
        expected = np.concatenate([E @ U[:, k], [0.0, 0.0]])
        residual = max(residual, float(np.max(np.abs(conj - expected))))

    words = _words(unit, WORD_LENGTH)
    displacement = math.inf
    for x, k in words:
        if not any(x) and k == 0:
            continue
        coords = np.concatenate([E @ np.array(x, dtype=float), k * np.array(torus)])
        displacement = min(displacement, float(np.linalg.norm(coords)))

    warnings = []
    if condition > 1e4:
        warnings.append(f"eigenbasis condition number {condition:.3g}")
        logger.warning("dirichlet lattice for %s: eigenbasis condition number %.3g", cubic.poly, condition)
    logger.debug("dirichlet lattice for %s: %d words, residual %.3g", cubic.poly, len(words), residual)
    return LatticeReport(
        cubic=cubic,
        companion=M,
        det=det,
        eigenvalues=eigenvalues,
        eigenvalue_product=float(np.prod(eigenvalues)),
        log_sum=float(sum(math.log(abs(v)) for v in eigenvalues)),
        squared=squared,
        unit=unit,
        embedding=E,
        condition=condition,
        translations=translations,
        torus=torus,
        log_roots=[float(v) for v in logs],
        relation_residual=residual,
        min_displacement=displacement,
        words_checked=len(words),
        warnings=warnings,
    )


# Integer characteristic polynomials for the R^4 x| R families

@dataclass(frozen=True)
class SolTarget:
    degree: Literal[3, 4]
    normalized_logs: tuple[float, ...]


@dataclass(frozen=True)
class SolSearchResult:
    verdict: Literal["witness-found", "none-in-bound"]
    target: SolTarget
    bound: int
    searched: int
    candidates: int
    witness: tuple[int, ...] | None = None
    polynomial: Poly | None = None


def _normalized_logs(roots: Sequence[float]) -> np.ndarray:
    logs = np.sort(np.log(np.asarray(roots, dtype=float)))[::-1]
    return logs / logs[0]


def make_target(degree: int, logs: Sequence[float]) -> SolTarget:
    if degree not in (3, 4):
        raise MalformedTarget(f"degree must be 3 or 4, got {degree}")
    if len(logs) != degree:
        raise MalformedTarget(f"expected {degree} normalized logs, got {len(logs)}")
    values = sorted((float(v) for v in logs), reverse=True)
    if not all(math.isfinite(v) for v in values):
        raise MalformedTarget("normalized logs must be finite")
    if abs(values[0] - 1) > LOG_TOLERANCE:
        raise MalformedTarget(f"largest normalized log must be 1, got {values[0]}")
    if abs(sum(values)) > LOG_TOLERANCE:
        raise MalformedTarget(f"normalized logs must sum to 0, got {sum(values)}")
    if len(set(round(v, 9) for v in values)) != degree:
        raise MalformedTarget("normalized logs must be distinct")
    return SolTarget(degree=degree, normalized_logs=tuple(values))


def log_root_target(p: Poly) -> SolTarget:
    """
    Normalized log-root vector of a polynomial with distinct positive real roots
    """
    if p.degree not in (3, 4):
        raise MalformedTarget(f"expected a cubic or quartic, got degree {p.degree}")
    sig = root_signature(p)
    if not sig.all_real or sig.distinct != p.degree or sig.zero_mult:
        raise MalformedTarget(f"{p} does not have {p.degree} distinct nonzero real roots")
    if sturm_count(p, 0) != p.degree:
        raise MalformedTarget(f"{p} has non-positive roots")
    roots = np.roots([float(a) for a in reversed(p.coeffs)]).real
    return make_target(p.degree, _normalized_logs(roots).tolist())


def target_for_label(label: GeometryLabel) -> SolTarget:
    """
    Target from a classified family label; the root vector of the algebra action
    is already the normalized log-root vector of e^A
    """
    if isinstance(label, Sol5Diag) and label.roots is not None:
        return make_target(4, [float(Fraction(r)) for r in label.roots])
    if isinstance(label, Sol4mnxE) and label.roots is not None:
        return make_target(3, [float(Fraction(r)) for r in label.roots])
    raise MalformedTarget(f"{label} carries no real root data")


def _candidates(degree: int, bound: int) -> np.ndarray:
    return np.array(list(itertools.product(range(1, bound + 1), repeat=degree - 1)), dtype=float)


def _companions(degree: int, tuples: np.ndarray) -> np.ndarray:
    # x^3 - m x^2 + n x - 1 and x^4 - m x^3 + n x^2 - p x + 1
    count = len(tuples)
    comp = np.zeros((count, degree, degree))
    for i in range(1, degree):
        comp[:, i, i - 1] = 1.0
    for k in range(degree - 1):
        comp[:, degree - 1 - k, degree - 1] = (-1) ** k * tuples[:, k]
    comp[:, 0, degree - 1] = -1.0 if degree == 4 else 1.0
    return comp


def _poly_from_tuple(degree: int, coeffs: Sequence[int]) -> Poly:
    if degree == 3:
        m, n = coeffs
        return Poly((-1, n, -m, 1))
    m, n, p = coeffs
    return Poly((1, -p, n, -m, 1))


def sol_family_model_check(target: SolTarget, bound: int) -> SolSearchResult:
    """
    Exhaustive search over x^3 - m x^2 + n x - 1 (degree 3) or
    x^4 - m x^3 + n x^2 - p x + 1 (degree 4) with coefficients in [1, bound];
    the first match in lexicographic order is Sturm-verified and returned
    """
    if not isinstance(target, SolTarget):
        raise MalformedTarget("target must be a SolTarget")
    target = make_target(target.degree, target.normalized_logs)
    if not 1 <= bound <= config.SEARCH_BOUND_LIMIT:
        raise InvalidParameter(f"bound must be in [1, {config.SEARCH_BOUND_LIMIT}], got {bound}")
    degree = target.degree
    tuples = _candidates(degree, bound)
    roots = np.linalg.eigvals(_companions(degree, tuples))
    real = np.all(np.abs(roots.imag) < 1e-9, axis=1) & np.all(roots.real > 0, axis=1)
    want = np.array(target.normalized_logs)
    candidates = 0
    for idx in np.flatnonzero(real):
        r = np.sort(roots[idx].real)
        if np.min(np.diff(r)) < 1e-9:
            continue
        if np.max(np.abs(_normalized_logs(r) - want)) > LOG_TOLERANCE:
            continue
        candidates += 1
        coeffs = tuple(int(c) for c in tuples[idx])
        p = _poly_from_tuple(degree, coeffs)
        sig = root_signature(p)
        if sig.all_real and sig.zero_mult == 0 and sig.distinct == degree and sturm_count(p, 0) == degree:
            logger.debug("sol search: witness %s after %d candidates", coeffs, candidates)
            return SolSearchResult("witness-found", target, bound, len(tuples), candidates, coeffs, p)
    logger.debug("sol search: none among %d polynomials", len(tuples))
    return SolSearchResult("none-in-bound", target, bound, len(tuples), candidates)


# Compact quotients of ~SL_2 x_alpha S^3

def compact_quotients(alpha: str) -> bool:
    label = SL2xS3(alpha=alpha)
    return bool(label.compact_quotients)
