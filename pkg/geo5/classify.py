"""
Identification key for 5-dimensional solvable Lie algebras with trivial isotropy.

The tree asks: nilpotent? then 4-D abelian ideal and g^4 != 0; otherwise the
type of the nilradical, then the Jordan structure of the complement action or
the dimension of the center. The leaf reached is only reported after the
algebra's invariants match those of the leaf's reference algebra.
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np

from geo5.errors import InvalidParameter, NotSolvable, WrongBranch, WrongDimension
from geo5.exact import (
    Mat,
    Poly,
    RootSignature,
    charpoly,
    inertia,
    jordan_block_count,
    multiplicity_pattern,
    poly_gcd,
    random_invertible,
    rational_roots,
    root_signature,
)
from geo5.labels import GeometryLabel, Named, Sol4mnxE, Sol5Complex, Sol5Diag, format_param
from geo5.liealg import (
    Analysis,
    LieAlgebra,
    ad,
    basis_change,
    bracket_span,
    centralizer,
    ensure_valid,
    has_abelian_ideal_dim4,
    restrict_to,
)


logger = logging.getLogger(__name__)

Status = Literal["certified", "unverified"]

LEAF_FAMILY = Sol5Diag.FAMILY


@dataclass(frozen=True)
class TraceStep:
    question: str
    answer: str
    witness: str = ""


@dataclass(frozen=True)
class ActionData:
    """
    Complement action on a 4-dimensional nilradical
    """
    jordan_blocks: int
    signature: RootSignature
    multiplicities: tuple[int, ...]
    charpoly: Poly

    def shape(self) -> tuple:
        return self.jordan_blocks, self.signature, self.multiplicities


@dataclass(frozen=True)
class Fingerprint:
    lcs_dims: tuple[int, ...]
    ucs_dims: tuple[int, ...]
    ds_dims: tuple[int, ...]
    center_dim: int
    nilradical_dim: int
    nilradical_derived_dim: int
    unimodular: bool
    abelian_ideal_4: bool | None
    killing_signature: tuple[int, int, int]
    action: ActionData | None

    def matches(self, reference: Fingerprint) -> bool:
        """
        Equality of every invariant except the action's root values; the Killing
        signature is compared only when there is no complement action
        """
        own = (self.lcs_dims, self.ucs_dims, self.ds_dims, self.center_dim, self.nilradical_dim,
               self.nilradical_derived_dim, self.unimodular, self.abelian_ideal_4)
        ref = (reference.lcs_dims, reference.ucs_dims, reference.ds_dims, reference.center_dim,
               reference.nilradical_dim, reference.nilradical_derived_dim, reference.unimodular,
               reference.abelian_ideal_4)
        if own != ref:
            return False
        if (self.action is None) != (reference.action is None):
            return False
        if self.action is None:
            return self.killing_signature == reference.killing_signature
        return self.action.shape() == reference.action.shape()

    def to_dict(self) -> dict:
        data = asdict(self)
        if self.action is not None:
            data["action"]["charpoly"] = str(self.action.charpoly)
        return data


@dataclass(frozen=True)
class Classification:
    label: GeometryLabel
    leaf: str
    trace: tuple[TraceStep, ...]
    status: Status
    fingerprint: Fingerprint


@dataclass(frozen=True)
class NotInKey:
    fingerprint: Fingerprint
    trace: tuple[TraceStep, ...]
    reason: str


# Invariants

def _analysis(L: LieAlgebra | Analysis) -> Analysis:
    return L if isinstance(L, Analysis) else Analysis(L)


def action_root_data(L: LieAlgebra | Analysis) -> ActionData:
    """
    Jordan and root data of ad t on the nilradical N, for any t outside N
    """
    an = _analysis(L)
    N, _ = an.nilradical
    if N.dim != 4 or an.algebra.dim - N.dim != 1:
        raise WrongBranch(f"needs a 4-dimensional nilradical of codimension 1, got dimension {N.dim}")
    t = N.complement_basis()[0]
    M = restrict_to(ad(an.algebra, t), N)
    p = charpoly(M)
    return ActionData(
        jordan_blocks=jordan_block_count(M),
        signature=root_signature(p),
        multiplicities=multiplicity_pattern(p),
        charpoly=p,
    )


def fingerprint(L: LieAlgebra | Analysis) -> Fingerprint:
    an = _analysis(L)
    if not an.solvable:
        raise NotSolvable("fingerprints are defined for solvable algebras")
    N, _ = an.nilradical
    algebra = an.algebra
    action = None
    if N.dim == 4 and algebra.dim == 5:
        action = action_root_data(an)
    return Fingerprint(
        lcs_dims=tuple(s.dim for s in an.lcs),
        ucs_dims=tuple(s.dim for s in an.ucs),
        ds_dims=tuple(s.dim for s in an.ds),
        center_dim=an.center.dim,
        nilradical_dim=N.dim,
        nilradical_derived_dim=bracket_span(algebra, N, N).dim,
        unimodular=an.unimodular,
        abelian_ideal_4=has_abelian_ideal_dim4(algebra) if an.nilpotent and algebra.dim == 5 else None,
        killing_signature=inertia(an.killing),
        action=action,
    )


def nilradical_type(L: LieAlgebra | Analysis) -> str | None:
    """
    "R^3", "R^4", "R+n3" or None for anything else
    """
    an = _analysis(L)
    N, _ = an.nilradical
    derived = bracket_span(an.algebra, N, N).dim
    if N.dim in (3, 4) and derived == 0:
        return f"R^{N.dim}"
    if N.dim == 4 and derived == 1 and centralizer(an.algebra, N).intersection(N).dim == 2:
        return "R+n3"
    return None


# Family parameters

def _normalize(values: list, exact: bool) -> list:
    """
    Scales so the largest entry is 1, for both signs of the scale, and keeps the
    lexicographically larger sorted tuple; the result is invariant under t -> s t
    """
    candidates = []
    for sign in (1, -1):
        scaled = [sign * v for v in values]
        top = max(scaled)
        if top <= 0:
            continue
        vec = sorted((v / top for v in scaled), reverse=True)
        key = tuple(vec) if exact else tuple(round(float(v), 10) for v in vec)
        candidates.append((key, vec))
    if not candidates:
        raise WrongBranch("no positive root to normalize by")
    return max(candidates, key=lambda c: c[0])[1]


def _real_roots_float(p: Poly) -> list[float]:
    roots = np.roots([float(a) for a in reversed(p.coeffs)])
    return sorted(float(r.real) for r in roots if abs(r.imag) < 1e-9)


def _nonzero_roots(p: Poly, count: int) -> tuple[list, bool]:
    """
    Nonzero real roots of p, exact when they are all rational
    """
    exact = [r for r in rational_roots(p) if r != 0]
    if len(exact) == count:
        return exact, True
    floats = [r for r in _real_roots_float(p) if abs(r) > 1e-12]
    return floats, False


def _exact_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def _complex_family(p: Poly) -> Sol5Complex:
    real = rational_roots(p)
    if len(set(real)) == 2:
        r1, r2 = sorted(set(real))
        q = p // Poly.from_roots([r1, r2])
        beta, gamma = q.coeffs[1], q.coeffs[0]
        re = -beta / 2
        im_sq = gamma - beta * beta / 4
        candidates = []
        for sign in (1, -1):
            pair = sorted([sign * r1, sign * r2], reverse=True)
            if pair[0] <= 0:
                continue
            scale = pair[0]
            im = _exact_sqrt(im_sq / (scale * scale))
            im_text = format_param(im) if im is not None else format_param(math.sqrt(float(im_sq)) / float(scale))
            candidates.append(((pair[0] / scale, pair[1] / scale, sign * re / scale), im_text))
        (a, b, c), im_text = max(candidates, key=lambda item: item[0])
        return Sol5Complex(real_roots=(format_param(a), format_param(b)),
                           complex_real_part=format_param(c), complex_imag_part=im_text)
    roots = np.roots([float(a) for a in reversed(p.coeffs)])
    reals = sorted((float(r.real) for r in roots if abs(r.imag) < 1e-9), reverse=True)
    pair = next((r for r in roots if r.imag > 1e-9), None)
    if pair is None:
        raise InvalidParameter(f"{p} has no complex pair of roots")
    candidates = []
    for sign in (1, -1):
        scaled = sorted([sign * r for r in reals], reverse=True)
        if scaled[0] <= 0:
            continue
        scale = scaled[0]
        key = (1.0, round(scaled[1] / scale, 10), round(sign * pair.real / scale, 10))
        candidates.append((key, abs(pair.imag) / scale))
    (a, b, c), im = max(candidates, key=lambda item: item[0])
    return Sol5Complex(real_roots=(format_param(a), format_param(b)),
                       complex_real_part=format_param(c), complex_imag_part=format_param(im))


def family_params(L: LieAlgebra | Analysis, leaf: str = LEAF_FAMILY) -> GeometryLabel | None:
    """
    Sub-label of the four-block leaf from the root data of the complement action,
    or None when the roots fit no catalog entry
    """
    if leaf != LEAF_FAMILY:
        raise WrongBranch(f"family parameters are only defined at the leaf {LEAF_FAMILY}")
    data = action_root_data(L)
    if data.jordan_blocks != 4:
        raise WrongBranch(f"expected 4 Jordan blocks, got {data.jordan_blocks}")
    p, sig = data.charpoly, data.signature
    if sig.zero_mult == 0 and sig.distinct == 4 and sig.real == 4:
        roots, exact = _nonzero_roots(p, 4)
        return Sol5Diag(roots=tuple(format_param(r) for r in _normalize(roots, exact)))
    if sig.zero_mult == 0 and sig.distinct == 4 and sig.real == 2:
        return _complex_family(p)
    if sig.zero_mult == 0 and data.multiplicities == (2, 2) and sig.real == 2:
        c = p.monic().coeffs
        if c[3] == 0 and c[1] == 0 and c[2] < 0 and c[0] == c[2] * c[2] / 4:
            return Named(name="A5,7^{1,-1,-1}")
        return None
    if sig.zero_mult == 1 and sig.distinct == 4 and sig.real == 4:
        roots, exact = _nonzero_roots(p, 3)
        return Sol4mnxE(roots=tuple(format_param(r) for r in _normalize(roots, exact)))
    if sig.zero_mult == 1 and sig.distinct == 3 and data.multiplicities == (2, 1, 1):
        q = p // Poly.x()
        g = poly_gcd(q, q.derivative())
        if g.degree == 1:
            r = -g.coeffs[0]
            if q.monic() == Poly.from_roots([r, r, -2 * r]):
                return Named(name="Sol^4_0 x E")
        return None
    if sig.zero_mult == 2 and sig.distinct == 3 and sig.real == 3:
        q = (p // Poly.x() // Poly.x()).monic()
        if q.degree == 2 and q.coeffs[1] == 0 and q.coeffs[0] < 0:
            return Named(name="Sol^3 x E^2")
    return None


# References

@lru_cache(maxsize=None)
def reference_fingerprint(name: str) -> Fingerprint:
    """
    Fingerprint of the atlas algebra for a leaf or sub-label (family name for families)
    """
    from geo5.atlas import build_algebra

    return fingerprint(build_algebra(name))


def leaf_references() -> dict[str, Fingerprint]:
    from geo5.atlas import KEY_LEAVES

    return {leaf: reference_fingerprint(leaf) for leaf in KEY_LEAVES}


# The key

def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def classify_solvable5(L: LieAlgebra) -> Classification | NotInKey:
    if L.dim != 5:
        raise WrongDimension(f"the key classifies 5-dimensional algebras, got dimension {L.dim}")
    ensure_valid(L)
    an = Analysis(L)
    if not an.solvable:
        raise NotSolvable("the algebra is not solvable")
    trace: list[TraceStep] = []
    status: Status = "certified"
    label: GeometryLabel | None = None
    lcs_dims = tuple(s.dim for s in an.lcs)

    def reject(reason: str) -> NotInKey:
        logger.debug("classify: not in key (%s)", reason)
        return NotInKey(fingerprint(an), tuple(trace), reason)

    if an.nilpotent:
        trace.append(TraceStep("nilpotent", "yes", f"lcs dims {lcs_dims}"))
        abelian = has_abelian_ideal_dim4(L)
        trace.append(TraceStep("4-D abelian ideal", _yes(abelian)))
        g4 = len(an.lcs) > 3 and an.lcs[3].dim > 0
        trace.append(TraceStep("g^4 != 0", _yes(g4), f"dim g^4 = {an.lcs[3].dim if len(an.lcs) > 3 else 0}"))
        leaf = {
            (True, True): "A5,2",
            (True, False): "Nil^4 x E",
            (False, True): "A5,6",
            (False, False): "A5,5",
        }[(abelian, g4)]
    else:
        trace.append(TraceStep("nilpotent", "no", f"lcs dims {lcs_dims}"))
        N, nil_status = an.nilradical
        if nil_status != "certified":
            status = "unverified"
        kind = nilradical_type(an)
        trace.append(TraceStep("nilradical", kind or "other", f"dim {N.dim}, {nil_status}"))
        if kind == "R^3":
            leaf = "A5,33^{-1,-1}"
        elif kind == "R^4":
            data = action_root_data(an)
            trace.append(TraceStep("Jordan blocks", str(data.jordan_blocks), f"charpoly {data.charpoly}"))
            if data.jordan_blocks == 2:
                leaf = "A5,15^{-1}"
            elif data.jordan_blocks == 3:
                leaf = "A5,8^{-1}"
            elif data.jordan_blocks == 4:
                leaf = LEAF_FAMILY
                label = family_params(an)
                if label is None:
                    return reject(f"root pattern of {data.charpoly} fits no catalog entry")
                trace.append(TraceStep("root data", str(label)))
            else:
                return reject(f"{data.jordan_blocks} Jordan block(s)")
        elif kind == "R+n3":
            center_dim = an.center.dim
            trace.append(TraceStep("center dim", str(center_dim)))
            if center_dim == 1:
                leaf = "A5,20^0"
            elif center_dim == 2:
                leaf = "Sol^4_1 x E"
            else:
                return reject(f"center of dimension {center_dim}")
        else:
            return reject(f"nilradical of dimension {N.dim} is not R^3, R^4 or R+n3")

    if label is None:
        label = Named(name=leaf)
    fp = fingerprint(an)
    reference = reference_fingerprint(label.family)
    if not fp.matches(reference):
        return reject(f"invariants differ from the reference algebra of {label.family}")
    logger.debug("classify: %s (%s)", label, status)
    return Classification(label=label, leaf=leaf, trace=tuple(trace), status=status, fingerprint=fp)


@dataclass(frozen=True)
class InvarianceReport:
    trials: int
    mismatches: int
    first_mismatch: str | None = None

    @property
    def invariant(self) -> bool:
        return self.mismatches == 0


def _summary(result: Classification | NotInKey) -> tuple:
    answers = tuple((s.question, s.answer) for s in result.trace)
    if isinstance(result, NotInKey):
        return ("not in key", answers)
    return (str(result.label), answers)


def invariance_check(L: LieAlgebra, trials: int, rng: np.random.Generator) -> InvarianceReport:
    """
    Re-classifies under random integer basis changes and compares label and trace answers
    """
    expected = _summary(classify_solvable5(L))
    mismatches = 0
    first = None
    for _ in range(trials):
        P: Mat = random_invertible(rng, L.dim)
        got = _summary(classify_solvable5(basis_change(L, P)))
        if got != expected:
            mismatches += 1
            if first is None:
                first = f"{got[0]} instead of {expected[0]}"
    return InvarianceReport(trials, mismatches, first)
