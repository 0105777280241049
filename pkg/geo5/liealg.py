"""
Lie algebras given by rational structure constants, and the structural
invariants the identification key reads off them.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Literal, Mapping, Sequence

from geo5.config import PROBE_HEIGHT
from geo5.errors import (
    InvalidAlgebra,
    NotSolvable,
    ShapeMismatch,
    WrongBranch,
    WrongDimension,
)
from geo5.exact import (
    ONE,
    ZERO,
    Mat,
    Subspace,
    charpoly,
    interpolate,
    kernel,
    poly_gcd,
    rational_roots,
    to_rat,
)


logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]
NilradicalStatus = Literal["certified", "probe-based"]


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """
    Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.

    The full tensor is stored (not just i < j) so that `validate` can report
    antisymmetry failures of hand-built inputs.
    """
    dim: int
    basis_names: tuple[str, ...]
    c: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        n = self.dim
        if len(self.basis_names) != n:
            raise ShapeMismatch(f"{len(self.basis_names)} basis names for dimension {n}")
        if len(self.c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in self.c):
            raise ShapeMismatch(f"structure constants must be {n}x{n}x{n}")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction | int | str]],
        names: Sequence[str] | None = None,
    ) -> LieAlgebra:
        """
        Builds the algebra from the nonzero brackets [e_i, e_j] = sum_k q e_k,
        filling in [e_j, e_i] by antisymmetry. Indices are 0-based.
        """
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ShapeMismatch(f"bracket index ({i}, {j}) out of range for dimension {dim}")
            for k, q in terms.items():
                if not 0 <= k < dim:
                    raise ShapeMismatch(f"term index {k} out of range for dimension {dim}")
                q = to_rat(q)
                c[i][j][k] = q
                if i != j:
                    c[j][i][k] = -q
        names = tuple(names) if names is not None else tuple(f"e{i + 1}" for i in range(dim))
        return cls(dim, names, tuple(tuple(tuple(v) for v in row) for row in c))

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebra:
        return cls.from_brackets(dim, {})

    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """
        Nonzero brackets with i < j, the inverse of `from_brackets`
        """
        out = {}
        for i, j in itertools.combinations(range(self.dim), 2):
            terms = {k: q for k, q in enumerate(self.c[i][j]) if q != 0}
            if terms:
                out[(i, j)] = terms
        return out

    @cached_property
    def basis_ad(self) -> tuple[Mat, ...]:
        n = self.dim
        return tuple(
            Mat._raw(n, n, tuple(self.c[i][j][k] for k in range(n) for j in range(n)))
            for i in range(n)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim, self.basis_names, self.c) == (other.dim, other.basis_names, other.c)

    def __hash__(self) -> int:
        return hash((self.dim, self.basis_names, self.c))


def _check_vector(L: LieAlgebra, x: Sequence) -> Vector:
    if len(x) != L.dim:
        raise ShapeMismatch(f"vector of length {len(x)} in a {L.dim}-dimensional algebra")
    return tuple(to_rat(a) for a in x)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    x, y = _check_vector(L, x), _check_vector(L, y)
    out = [ZERO] * L.dim
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, q in enumerate(L.c[i][j]):
                if q:
                    out[k] += ab * q
    return tuple(out)


def ad(L: LieAlgebra, x: Sequence) -> Mat:
    """
    Matrix of y -> [x, y]; column j is [x, e_j]
    """
    x = _check_vector(L, x)
    n = L.dim
    entries = [ZERO] * (n * n)
    for i, a in enumerate(x):
        if a:
            for idx, q in enumerate(L.basis_ad[i].entries):
                if q:
                    entries[idx] += a * q
    return Mat._raw(n, n, tuple(entries))


def bracket_span(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    return Subspace.span(L.dim, [bracket(L, a, b) for a in A.vectors() for b in B.vectors()])


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    shift = L1.dim
    brackets = {k: v for k, v in L1.brackets().items()}
    for (i, j), terms in L2.brackets().items():
        brackets[(i + shift, j + shift)] = {k + shift: q for k, q in terms.items()}
    return LieAlgebra.from_brackets(L1.dim + L2.dim, brackets, L1.basis_names + L2.basis_names)


# Validation

@dataclass(frozen=True, slots=True)
class ValidationReport:
    ok: bool
    kind: Literal["antisymmetry", "jacobi"] | None = None
    indices: tuple[int, ...] = ()
    message: str = ""


def validate(L: LieAlgebra) -> ValidationReport:
    """
    Exact antisymmetry and Jacobi checks; reports the first violation (0-based indices)
    """
    n = L.dim
    c = L.c
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    return ValidationReport(
                        False, "antisymmetry", (i, j, k),
                        f"c[{i}][{j}][{k}] = {c[i][j][k]} but c[{j}][{i}][{k}] = {c[j][i][k]}",
                    )
    for i, j, k in itertools.combinations(range(n), 3):
        for l in range(n):
            total = ZERO
            for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
                for m in range(n):
                    if c[a][b][m] and c[m][d][l]:
                        total += c[a][b][m] * c[m][d][l]
            if total != 0:
                return ValidationReport(
                    False, "jacobi", (i, j, k, l),
                    f"Jacobi identity fails for ({L.basis_names[i]}, {L.basis_names[j]}, "
                    f"{L.basis_names[k]}): component {L.basis_names[l]} is {total}",
                )
    return ValidationReport(True)


def ensure_valid(L: LieAlgebra) -> LieAlgebra:
    report = validate(L)
    if not report.ok:
        raise InvalidAlgebra(report.message)
    return L


# Series, centers, ideals

def _series(L: LieAlgebra, step) -> list[Subspace]:
    terms = [Subspace.full(L.dim)]
    while terms[-1].dim:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    full = Subspace.full(L.dim)
    return _series(L, lambda s: bracket_span(L, full, s))


def derived_series(L: LieAlgebra) -> list[Subspace]:
    return _series(L, lambda s: bracket_span(L, s, s))


def centralizer(L: LieAlgebra, S: Subspace) -> Subspace:
    if not S.dim:
        return Subspace.full(L.dim)
    return kernel(Mat.vstack([ad(L, v) for v in S.vectors()]))


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, Subspace.full(L.dim))


def upper_central_series(L: LieAlgebra) -> list[Subspace]:
    """
    0 = z_0, z_{k+1} = {x : [g, x] in z_k}, up to stabilization
    """
    terms = [Subspace.zero(L.dim)]
    while terms[-1].dim < L.dim:
        ann = terms[-1].annihilator()
        nxt = kernel(Mat.vstack([ann @ a for a in L.basis_ad]))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def is_ideal(L: LieAlgebra, S: Subspace) -> bool:
    return all(S.contains(a.apply(v)) for a in L.basis_ad for v in S.vectors())


def is_ad_nilpotent(L: LieAlgebra, x: Sequence) -> bool:
    return ad(L, x).is_nilpotent()


def restrict_to(M: Mat, S: Subspace) -> Mat:
    """
    Matrix of an endomorphism on an invariant subspace, in the RREF basis of S
    """
    return Mat.from_columns([S.coordinates(M.apply(v)) for v in S.vectors()]) if S.dim else Mat.zeros(0)


def subalgebra(L: LieAlgebra, S: Subspace, names: Sequence[str] | None = None) -> LieAlgebra:
    """
    Structure constants of a subalgebra in the RREF basis of S
    """
    vecs = S.vectors()
    brackets = {}
    for a, b in itertools.combinations(range(S.dim), 2):
        br = bracket(L, vecs[a], vecs[b])
        if not S.contains(br):
            raise InvalidAlgebra("subspace is not closed under the bracket")
        terms = {k: q for k, q in enumerate(S.coordinates(br)) if q}
        if terms:
            brackets[(a, b)] = terms
    if names is None:
        names = [L.basis_names[p] for p in S.pivots]
    return LieAlgebra.from_brackets(S.dim, brackets, names)


# Reports

@dataclass(frozen=True, slots=True)
class StructureReport:
    lcs_dims: tuple[int, ...]
    ds_dims: tuple[int, ...]
    center_dim: int
    nilpotent: bool
    solvable: bool
    unimodular: bool


def is_unimodular(L: LieAlgebra) -> bool:
    return all(a.trace() == 0 for a in L.basis_ad)


def structure_report(L: LieAlgebra) -> StructureReport:
    lcs = lower_central_series(L)
    ds = derived_series(L)
    return StructureReport(
        lcs_dims=tuple(s.dim for s in lcs),
        ds_dims=tuple(s.dim for s in ds),
        center_dim=center(L).dim,
        nilpotent=lcs[-1].dim == 0,
        solvable=ds[-1].dim == 0,
        unimodular=is_unimodular(L),
    )


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


# Nilradical

def _combine(vectors: Sequence[Vector], coeffs: Sequence[Fraction]) -> Vector:
    n = len(vectors[0])
    return tuple(sum((a * v[k] for a, v in zip(coeffs, vectors) if a), ZERO) for k in range(n))


def _nilradical_two_parameters(L: LieAlgebra, f1: Vector, f2: Vector) -> list[Vector]:
    """
    Ad-nilpotent directions of span(f1, f2) modulo [g, g].

    The non-leading coefficients of charpoly(ad(s f1 + f2)) are polynomials in s
    of degree at most dim; their common rational roots give the nilpotent lines
    with a nonzero f2 component. The line through f1 is tested directly.
    """
    n = L.dim
    xs = [Fraction(s) for s in range(n + 1)]
    polys = [charpoly(ad(L, _combine([f1, f2], [s, ONE]))) for s in xs]
    coefficient_polys = [
        interpolate(xs, [p.coeffs[k] if k < len(p.coeffs) else ZERO for p in polys])
        for k in range(n)
    ]
    g = None
    for p in coefficient_polys:
        if not p.is_zero:
            g = p.monic() if g is None else poly_gcd(g, p)
    found = []
    if is_ad_nilpotent(L, f1):
        found.append(f1)
    if g is None:
        found.append(f2)
        return found
    for s in sorted(set(rational_roots(g))) if g.degree > 0 else []:
        candidate = _combine([f1, f2], [s, ONE])
        if is_ad_nilpotent(L, candidate):
            found.append(candidate)
    return found


def _nilradical_probe(L: LieAlgebra, complement: list[Vector]) -> list[Vector]:
    h = PROBE_HEIGHT
    found = []
    for coeffs in itertools.product(range(-h, h + 1), repeat=len(complement)):
        if not any(coeffs):
            continue
        candidate = _combine(complement, [Fraction(a) for a in coeffs])
        if is_ad_nilpotent(L, candidate):
            found.append(candidate)
    return found


def nilradical(L: LieAlgebra) -> tuple[Subspace, NilradicalStatus]:
    """
    Largest nilpotent ideal, as the set of ad-nilpotent elements of a solvable algebra.

    Certified when dim g/[g, g] <= 2; otherwise [g, g] is extended by every
    ad-nilpotent probe on a small integer grid over a complement.
    """
    lcs = lower_central_series(L)
    if not is_solvable(L):
        raise NotSolvable("nilradical is only computed for solvable algebras")
    full = Subspace.full(L.dim)
    if lcs[-1].dim == 0:
        return full, "certified"
    D = lcs[1]
    complement = D.complement_basis()
    q = len(complement)
    status: NilradicalStatus = "certified"
    if q == 1:
        extra = [complement[0]] if is_ad_nilpotent(L, complement[0]) else []
    elif q == 2:
        extra = _nilradical_two_parameters(L, complement[0], complement[1])
    else:
        logger.warning("nilradical: %d-dimensional abelianization, falling back to probes", q)
        extra = _nilradical_probe(L, complement)
        status = "probe-based"
    N = Subspace.span(L.dim, D.vectors() + extra)
    if not is_ideal(L, N) or not is_nilpotent(subalgebra(L, N)):
        # probes spanned too much; D itself is always a nilpotent ideal
        logger.warning("nilradical: probe span is not a nilpotent ideal, keeping [g, g]")
        N = D
    logger.debug("nilradical: dim %d (%s)", N.dim, status)
    return N, status


# Abelian ideals of codimension one

def _require_nilpotent_dim5(L: LieAlgebra) -> None:
    if L.dim != 5:
        raise WrongDimension(f"expected a 5-dimensional algebra, got dimension {L.dim}")
    if not is_nilpotent(L):
        raise WrongBranch("the 4-dimensional abelian ideal test needs a nilpotent algebra")


def _is_abelian(L: LieAlgebra, S: Subspace) -> bool:
    vecs = S.vectors()
    return all(not any(bracket(L, a, b)) for a, b in itertools.combinations(vecs, 2))


def has_abelian_ideal_dim4(L: LieAlgebra) -> bool:
    """
    Whether a nilpotent 5-dimensional algebra has a 4-dimensional abelian ideal.

    Such an ideal contains D = [g, g], so the search reduces to linear algebra
    over a complement of D, split by q = dim g/D.
    """
    _require_nilpotent_dim5(L)
    D = lower_central_series(L)[1]
    complement = D.complement_basis()
    q = len(complement)
    if q == 5:
        return True
    if q == 4:
        # D is a central line; the bracket induces an alternating form on g/D
        omega = Mat.from_rows([
            [D.coordinates(bracket(L, a, b))[0] for b in complement] for a in complement
        ])
        return omega.rank() <= 2
    if not _is_abelian(L, D):
        return False
    if q == 3:
        # complement directions commuting with D
        rows = []
        for d in D.vectors():
            cols = [bracket(L, d, f) for f in complement]
            rows.extend([[col[k] for col in cols] for k in range(L.dim)])
        S = [_combine(complement, v) for v in kernel(Mat.from_rows(rows)).vectors()]
        if len(S) <= 1:
            return False
        pairs = [bracket(L, a, b) for a, b in itertools.combinations(S, 2)]
        if len(S) == 2:
            return not any(pairs[0])
        return Mat.from_columns(pairs).rank() < 3
    if q == 2:
        return not centralizer(L, D).is_subspace_of(D)
    return False


# Basis changes and invariant forms

def basis_change(L: LieAlgebra, P: Mat, names: Sequence[str] | None = None) -> LieAlgebra:
    """
    Same algebra in the basis given by the columns of P
    """
    if (P.rows, P.cols) != (L.dim, L.dim):
        raise ShapeMismatch(f"basis change must be {L.dim}x{L.dim}")
    Pinv = P.inverse()
    cols = [P.col(a) for a in range(L.dim)]
    brackets = {}
    for a, b in itertools.combinations(range(L.dim), 2):
        terms = {k: q for k, q in enumerate(Pinv.apply(bracket(L, cols[a], cols[b]))) if q}
        if terms:
            brackets[(a, b)] = terms
    names = names if names is not None else [f"b{i + 1}" for i in range(L.dim)]
    return LieAlgebra.from_brackets(L.dim, brackets, names)


def killing_form(L: LieAlgebra) -> Mat:
    """
    B(e_i, e_j) = trace(ad e_i ad e_j) = sum_{k,l} c[i][k][l] c[j][l][k]
    """
    n = L.dim
    c = L.c
    B = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            total = ZERO
            for k in range(n):
                for l in range(n):
                    if c[i][k][l] and c[j][l][k]:
                        total += c[i][k][l] * c[j][l][k]
            B[i][j] = B[j][i] = total
    return Mat.from_rows(B)


@dataclass
class Analysis:
    """
    Lazily computed invariants of one algebra, shared by the classifier and fingerprints
    """
    algebra: LieAlgebra
    _cache: dict = field(default_factory=dict, repr=False)

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def lcs(self) -> list[Subspace]:
        return self._get("lcs", lambda: lower_central_series(self.algebra))

    @property
    def ds(self) -> list[Subspace]:
        return self._get("ds", lambda: derived_series(self.algebra))

    @property
    def ucs(self) -> list[Subspace]:
        return self._get("ucs", lambda: upper_central_series(self.algebra))

    @property
    def center(self) -> Subspace:
        return self._get("center", lambda: center(self.algebra))

    @property
    def nilpotent(self) -> bool:
        return self.lcs[-1].dim == 0

    @property
    def solvable(self) -> bool:
        return self.ds[-1].dim == 0

    @property
    def unimodular(self) -> bool:
        return self._get("unimodular", lambda: is_unimodular(self.algebra))

    @property
    def nilradical(self) -> tuple[Subspace, NilradicalStatus]:
        return self._get("nilradical", lambda: nilradical(self.algebra))

    @property
    def killing(self) -> Mat:
        return self._get("killing", lambda: killing_form(self.algebra))
