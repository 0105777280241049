"""
Exact arithmetic over Q: rationals, dense polynomials, matrices and subspaces.

Nothing in this module rounds. Floats appear only in `Mat.to_numpy` and at
the infinite endpoints accepted by `sturm_count`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from tokenize import TokenError
from typing import Iterable, Sequence

import numpy as np
from sympy import Poly as SymPoly, PolynomialError, Symbol, SympifyError, divisors
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from geo5.config import MAX_DEGREE
from geo5.errors import (
    DegenerateInput,
    DegreeTooLarge,
    EndpointRoot,
    InputFormatError,
    ShapeMismatch,
    SingularMatrix,
)


Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rat(value: Fraction | int | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rat(text: str) -> Fraction:
    """
    Parses "p/q" or "p" with integer p, q; decimals are rejected
    """
    num, sep, den = text.strip().partition("/")
    try:
        return Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"invalid rational {text!r}") from exc


def format_rat(value: Fraction) -> str:
    # Fraction.__str__ is already "p/q" with q > 0, or "p" when q == 1
    return str(value)


# Polynomials

@dataclass(frozen=True, slots=True)
class Poly:
    """
    Dense polynomial over Q, constant term first. Trailing zeros are stripped,
    so the zero polynomial has no coefficients and degree -1.
    """
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [to_rat(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> Poly:
        return cls((ZERO, ONE))

    @classmethod
    def constant(cls, value) -> Poly:
        return cls((to_rat(value),))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        result = cls((ONE,))
        for r in roots:
            result = result * cls((-to_rat(r), ONE))
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __neg__(self) -> Poly:
        return Poly(tuple(-a for a in self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | Fraction | int) -> Poly:
        if not isinstance(other, Poly):
            k = to_rat(other)
            return Poly(tuple(k * a for a in self.coeffs))
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            raise DegenerateInput("division by the zero polynomial")
        rem = list(self.coeffs)
        quot = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead
        d = other.degree
        for k in range(len(quot) - 1, -1, -1):
            f = rem[k + d] / lead
            quot[k] = f
            if f:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= f * b
        return Poly(tuple(quot)), Poly(tuple(rem[:d] if d > 0 else ()))

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def derivative(self) -> Poly:
        return Poly(tuple(k * a for k, a in enumerate(self.coeffs) if k > 0))

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self * (1 / self.lead)

    def primitive(self) -> Poly:
        """
        Rescales by a positive rational to coprime integer coefficients; signs are kept
        """
        if self.is_zero:
            return self
        den = math.lcm(*(a.denominator for a in self.coeffs))
        ints = [a.numerator * (den // a.denominator) for a in self.coeffs]
        g = math.gcd(*ints)
        return Poly(tuple(Fraction(v // g) for v in ints))

    def integer_coeffs(self) -> list[int]:
        return [int(a) for a in self.primitive().coeffs]

    def __call__(self, value: Fraction | int) -> Fraction:
        acc = ZERO
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def sign_at(self, point: Fraction | float) -> int:
        if self.is_zero:
            return 0
        if isinstance(point, float) and math.isinf(point):
            s = 1 if self.lead > 0 else -1
            return s if point > 0 or self.degree % 2 == 0 else -s
        v = self(point)
        return (v > 0) - (v < 0)

    def rescale_roots(self, factor: Fraction | int) -> Poly:
        """
        Polynomial whose roots are `factor` times the roots of self
        """
        k = to_rat(factor)
        n = self.degree
        return Poly(tuple(a * k ** (n - i) for i, a in enumerate(self.coeffs)))

    def companion(self) -> Mat:
        """
        Companion matrix of the monic normalization: ones on the subdiagonal,
        negated coefficients in the last column
        """
        p = self.monic()
        n = p.degree
        if n < 1:
            raise DegenerateInput("companion matrix needs degree >= 1")
        entries = [ZERO] * (n * n)
        for i in range(1, n):
            entries[i * n + i - 1] = ONE
        for i in range(n):
            entries[i * n + n - 1] = -p.coeffs[i]
        return Mat._raw(n, n, tuple(entries))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)


def parse_poly(text: str, variable: str = "x") -> Poly:
    """
    Parses text such as "x^3 + x^2 - 2x - 1" into a Poly with rational coefficients
    """
    var = Symbol(variable)
    try:
        expr = parse_expr(text, local_dict={variable: var}, transformations=_TRANSFORMS)
        sym = SymPoly(expr, var)
    except (SyntaxError, TypeError, ValueError, TokenError, SympifyError, PolynomialError) as exc:
        raise InputFormatError(f"cannot parse polynomial {text!r}") from exc
    coeffs = []
    for c in reversed(sym.all_coeffs()):
        if not c.is_Rational:
            raise InputFormatError(f"non-rational coefficient {c} in {text!r}")
        coeffs.append(Fraction(int(c.p), int(c.q)))
    return Poly(tuple(coeffs))


def _check_degree(p: Poly) -> None:
    if p.degree > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {p.degree} exceeds the cap {MAX_DEGREE}")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    Monic gcd; gcd(0, 0) is the zero polynomial
    """
    while not b.is_zero:
        a, b = b, (a % b).primitive()
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero:
        raise DegenerateInput("square-free part of the zero polynomial")
    _check_degree(p)
    return (p // poly_gcd(p, p.derivative())).monic()


def multiplicity_pattern(p: Poly) -> tuple[int, ...]:
    """
    Multiplicities of the distinct complex roots, largest first (Yun's algorithm)
    """
    if p.is_zero:
        raise DegenerateInput("multiplicities of the zero polynomial")
    _check_degree(p)
    if p.degree < 1:
        return ()
    pattern: list[int] = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    d = dp // a - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        pattern.extend([i] * a.degree)
        b = b // a
        d = d // a - b.derivative()
        i += 1
    return tuple(sorted(pattern, reverse=True))


def sturm_sequence(p: Poly) -> list[Poly]:
    """
    p, p', then negated remainders; every term is content-normalized by a positive factor
    """
    seq = [p.primitive()]
    dp = p.derivative()
    if dp.is_zero:
        return seq
    seq.append(dp.primitive())
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero:
            return seq
        seq.append((-r).primitive())


def _sign_changes(seq: Sequence[Poly], point: Fraction | float) -> int:
    signs = [s for s in (q.sign_at(point) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _as_bound(value: Fraction | int | float) -> Fraction | float:
    if isinstance(value, float):
        if math.isinf(value):
            return value
        if math.isnan(value):
            raise DegenerateInput("NaN interval endpoint")
        return Fraction(value)
    return to_rat(value)


def sturm_count(p: Poly, lo: Fraction | int | float = -math.inf, hi: Fraction | int | float = math.inf) -> int:
    """
    Number of distinct real roots of p in the open interval (lo, hi)
    """
    if p.is_zero:
        raise DegenerateInput("Sturm count of the zero polynomial")
    _check_degree(p)
    lo, hi = _as_bound(lo), _as_bound(hi)
    if not lo < hi:
        raise DegenerateInput(f"empty interval ({lo}, {hi})")
    for end in (lo, hi):
        if not isinstance(end, float) and p(end) == 0:
            raise EndpointRoot(f"{end} is a root of {p}")
    seq = sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


@dataclass(frozen=True, slots=True)
class RootSignature:
    distinct: int
    real: int
    complex_pairs: int
    zero_mult: int
    all_real: bool


def root_signature(p: Poly) -> RootSignature:
    if p.is_zero:
        raise DegenerateInput("root signature of the zero polynomial")
    s = squarefree_part(p)
    real = sturm_count(s) if s.degree > 0 else 0
    zero_mult = next(i for i, a in enumerate(p.coeffs) if a != 0)
    return RootSignature(
        distinct=s.degree,
        real=real,
        complex_pairs=(s.degree - real) // 2,
        zero_mult=zero_mult,
        all_real=real == s.degree,
    )


def rational_roots(p: Poly) -> list[Fraction]:
    """
    All rational roots with multiplicity, ascending
    """
    if p.is_zero:
        raise DegenerateInput("rational roots of the zero polynomial")
    _check_degree(p)
    q = p.primitive()
    roots: list[Fraction] = []
    while q.degree > 0 and q.coeffs[0] == 0:
        roots.append(ZERO)
        q = Poly(q.coeffs[1:])
    if q.degree < 1:
        return sorted(roots)
    a0, an = abs(int(q.coeffs[0])), abs(int(q.lead))
    candidates = sorted({s * Fraction(d, e) for d in divisors(a0) for e in divisors(an) for s in (1, -1)})
    for c in candidates:
        while q.degree > 0 and q(c) == 0:
            roots.append(c)
            q = q // Poly((-c, ONE))
    return sorted(roots)


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """
    Newton divided differences through the points (xs[i], ys[i])
    """
    if len(xs) != len(ys) or not xs:
        raise ShapeMismatch("interpolation needs matching, non-empty point lists")
    coef = [to_rat(y) for y in ys]
    xs = [to_rat(x) for x in xs]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = Poly((coef[-1],))
    for i in range(n - 2, -1, -1):
        result = result * Poly((-xs[i], ONE)) + Poly((coef[i],))
    return result


# Matrices

def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


@dataclass(frozen=True, slots=True)
class Mat:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(to_rat(a) for a in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple[Fraction, ...]) -> Mat:
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Mat:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(a for r in rows for a in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Mat:
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0, ())

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Mat:
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls._raw(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> Mat:
        values = [to_rat(v) for v in values]
        n = len(values)
        return cls._raw(n, n, tuple(values[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def block_diag(cls, *blocks: Mat) -> Mat:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[ZERO] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r += b.rows
            c += b.cols
        return cls.from_rows(out, cols=m)

    @classmethod
    def vstack(cls, mats: Sequence[Mat]) -> Mat:
        if not mats:
            raise ShapeMismatch("nothing to stack")
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ShapeMismatch("vstack needs equal column counts")
        return cls._raw(sum(m.rows for m in mats), cols, tuple(a for m in mats for a in m.entries))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Mat:
        return Mat._raw(self.cols, self.rows, tuple(a for j in range(self.cols) for a in self.col(j)))

    def _same_shape(self, other: Mat) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: Mat) -> Mat:
        self._same_shape(other)
        return Mat._raw(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Mat) -> Mat:
        self._same_shape(other)
        return Mat._raw(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Mat:
        return Mat._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: Fraction | int) -> Mat:
        k = to_rat(k)
        return Mat._raw(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __matmul__(self, other: Mat) -> Mat:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
        return Mat._raw(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(self.row(i), vector) if a and b), ZERO) for i in range(self.rows))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ShapeMismatch("trace of a non-square matrix")
        return sum((self.entries[i * self.cols + i] for i in range(self.rows)), ZERO)

    def power(self, k: int) -> Mat:
        result = Mat.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def poly_eval(self, p: Poly) -> Mat:
        if not self.is_square:
            raise ShapeMismatch("polynomial of a non-square matrix")
        result = Mat.zeros(self.rows)
        ident = Mat.identity(self.rows)
        for a in reversed(p.coeffs):
            result = result @ self + ident.scale(a)
        return result

    def is_nilpotent(self) -> bool:
        if not self.is_square:
            raise ShapeMismatch("nilpotency of a non-square matrix")
        return self.power(self.rows).is_zero

    def rref(self) -> tuple[Mat, list[int]]:
        rows, pivots = _rref_rows(self.to_rows(), self.cols)
        return Mat._raw(len(rows), self.cols, tuple(a for r in rows for a in r)), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if not self.is_square:
            raise ShapeMismatch("determinant of a non-square matrix")
        a = self.to_rows()
        n = self.rows
        det = ONE
        for c in range(n):
            pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                det = -det
            det *= a[c][c]
            for i in range(c + 1, n):
                if a[i][c]:
                    f = a[i][c] / a[c][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return det

    def inverse(self) -> Mat:
        if not self.is_square:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.to_rows())]
        rows, pivots = _rref_rows(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(rows) < n:
            raise SingularMatrix("matrix is not invertible")
        return Mat.from_rows([r[n:] for r in rows])

    def to_numpy(self) -> np.ndarray:
        return np.array([float(a) for a in self.entries], dtype=float).reshape(self.rows, self.cols)

    def to_strings(self) -> list[list[str]]:
        return [[format_rat(a) for a in self.row(i)] for i in range(self.rows)]


@dataclass(frozen=True, slots=True)
class Subspace:
    """
    Subspace of Q^ambient held by its reduced row-echelon basis, which is canonical:
    two subspaces are equal iff their RREF bases are.
    """
    ambient: int
    basis: Mat
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence[Fraction]]) -> Subspace:
        rows = [[to_rat(a) for a in v] for v in vectors]
        if any(len(r) != ambient for r in rows):
            raise ShapeMismatch(f"vectors must have length {ambient}")
        rows, pivots = _rref_rows(rows, ambient)
        return cls(ambient, Mat._raw(len(rows), ambient, tuple(a for r in rows for a in r)), tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, Mat._raw(0, ambient, ()), ())

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls(ambient, Mat.identity(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [self.basis.row(i) for i in range(self.dim)]

    def coordinates(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """
        Coordinates in the RREF basis (read off at the pivot columns)
        """
        coords = tuple(to_rat(vector[p]) for p in self.pivots)
        recombined = [sum((c * b[k] for c, b in zip(coords, self.vectors())), ZERO) for k in range(self.ambient)]
        if any(a != to_rat(b) for a, b in zip(recombined, vector)):
            raise ShapeMismatch("vector does not lie in the subspace")
        return coords

    def contains(self, vector: Sequence[Fraction]) -> bool:
        try:
            self.coordinates(vector)
        except ShapeMismatch:
            return False
        return True

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.ambient, self.vectors() + other.vectors())

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.vectors())

    def annihilator(self) -> Mat:
        """
        Rows spanning the linear forms that vanish on the subspace
        """
        vecs = kernel(self.basis).vectors() if self.dim else Subspace.full(self.ambient).vectors()
        return Mat._raw(len(vecs), self.ambient, tuple(a for v in vecs for a in v))

    def intersection(self, other: Subspace) -> Subspace:
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient)
        ann = other.annihilator()
        if ann.rows == 0:
            return self
        coeffs = kernel(ann @ self.basis.transpose()).vectors()
        basis = self.vectors()
        return Subspace.span(self.ambient, [
            tuple(sum((c * b[k] for c, b in zip(a, basis)), ZERO) for k in range(self.ambient))
            for a in coeffs
        ])

    def complement_basis(self) -> list[tuple[Fraction, ...]]:
        """
        Standard basis vectors at the non-pivot columns
        """
        return [
            tuple(ONE if k == j else ZERO for k in range(self.ambient))
            for j in range(self.ambient) if j not in self.pivots
        ]


def random_invertible(rng: np.random.Generator, n: int, bound: int = 3) -> Mat:
    """
    Random invertible integer matrix with entries in [-bound, bound]
    """
    while True:
        M = Mat.from_rows(rng.integers(-bound, bound + 1, size=(n, n)).tolist())
        if M.det() != 0:
            return M


def kernel(M: Mat) -> Subspace:
    R, pivots = M.rref()
    free = [j for j in range(M.cols) if j not in pivots]
    vectors = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        vectors.append(v)
    return Subspace.span(M.cols, vectors)


def rank(M: Mat) -> int:
    return M.rank()


def charpoly(M: Mat) -> Poly:
    """
    det(xI - M) by the Faddeev-LeVerrier trace recursion
    """
    if not M.is_square:
        raise ShapeMismatch(f"characteristic polynomial of a {M.rows}x{M.cols} matrix")
    n = M.rows
    c = [ZERO] * (n + 1)
    c[n] = ONE
    ident = Mat.identity(n)
    Mk = Mat.zeros(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident.scale(c[n - k + 1])
        c[n - k] = -(M @ Mk).trace() / k
    return Poly(tuple(c))


def jordan_block_count(M: Mat) -> int:
    """
    Number of Jordan blocks over C, as dim ker s(M) with s the square-free
    part of the characteristic polynomial
    """
    if not M.is_square:
        raise ShapeMismatch("Jordan blocks of a non-square matrix")
    if M.rows == 0:
        return 0
    s = squarefree_part(charpoly(M))
    return M.rows - M.poly_eval(s).rank()


def inertia(M: Mat) -> tuple[int, int, int]:
    """
    (positive, negative, zero) counts of a symmetric matrix via congruence elimination
    """
    if not M.is_square or M != M.transpose():
        raise ShapeMismatch("inertia needs a symmetric matrix")
    a = M.to_rows()
    n = M.rows
    remaining = list(range(n))
    pos = neg = 0
    while remaining:
        idx = next((i for i in remaining if a[i][i] != 0), None)
        if idx is None:
            pair = next(((i, j) for i in remaining for j in remaining if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row and column i += row and column j; a[i][i] becomes 2 a[i][j]
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            idx = i
        p = a[idx][idx]
        if p > 0:
            pos += 1
        else:
            neg += 1
        remaining.remove(idx)
        for i in remaining:
            for j in remaining:
                a[i][j] -= a[i][idx] * a[idx][j] / p
    return pos, neg, n - pos - neg
