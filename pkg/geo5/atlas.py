"""
The catalog of 5-dimensional maximal model geometries: 53 individual
geometries and 6 families in 8 categories, with point stabilizers, the
product enumeration and structure constants for the Lie-group entries.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Literal

from geo5.errors import InvalidParameter, InputFormatError, NotAGroup, UnknownLabel
from geo5.exact import ONE, ZERO, Mat, parse_rat
from geo5.isotropy import parse_stabilizer
from geo5.labels import (
    GeometryLabel,
    LensBundle,
    Named,
    SL2xS3,
    SL2xSL2,
    Sol4mnxE,
    Sol5Complex,
    Sol5Diag,
    parse_label,
)
from geo5.liealg import LieAlgebra


logger = logging.getLogger(__name__)

Constructor = Callable[[GeometryLabel], LieAlgebra]


# Structure constants

def _alg(dim: int, brackets: dict, names: tuple[str, ...] | None = None) -> LieAlgebra:
    return LieAlgebra.from_brackets(dim, brackets, names)


def r4_semidirect(A: Mat, names: tuple[str, ...] | None = None) -> LieAlgebra:
    """
    R^4 x| R with e5 acting on span(e1..e4) by A, i.e. [e5, e_j] = sum_k A[k][j] e_k
    """
    if (A.rows, A.cols) != (4, 4):
        raise InvalidParameter("the action on R^4 must be a 4x4 matrix")
    brackets = {}
    for j in range(4):
        terms = {k: A[k, j] for k in range(4) if A[k, j] != 0}
        if terms:
            brackets[(4, j)] = terms
    return _alg(5, brackets, names)


def abelian5() -> LieAlgebra:
    return LieAlgebra.abelian(5)


def a51() -> LieAlgebra:
    # R^4 x| (x^2, x^2)
    return _alg(5, {(4, 0): {1: 1}, (4, 2): {3: 1}})


def a52() -> LieAlgebra:
    # R^4 x| (x^4)
    return _alg(5, {(4, 0): {1: 1}, (4, 1): {2: 1}, (4, 2): {3: 1}})


def a53() -> LieAlgebra:
    # (R x Heis_3) x| (x_3 -> x_2 -> y)
    return _alg(
        5,
        {(2, 3): {1: 1}, (4, 3): {2: 1}, (4, 2): {0: 1}},
        ("y", "x1", "x2", "x3", "t"),
    )


def heis5() -> LieAlgebra:
    return _alg(5, {(0, 1): {4: 1}, (2, 3): {4: 1}}, ("x1", "y1", "x2", "y2", "z"))


def _nil4_brackets() -> dict:
    # Nil^4 = R^3 x| (single x^3 block): [e4, e3] = e2, [e4, e2] = e1
    return {(3, 2): {1: 1}, (3, 1): {0: 1}}


def a55() -> LieAlgebra:
    # Nil^4 x| (3 -> 1)
    return _alg(5, {**_nil4_brackets(), (4, 2): {0: 1}})


def a56() -> LieAlgebra:
    # Nil^4 x| (4 -> 3 -> 1)
    return _alg(5, {**_nil4_brackets(), (4, 3): {2: 1}, (4, 2): {0: 1}})


def _jordan(value, size: int) -> Mat:
    value = Fraction(value)
    return Mat.from_rows([
        [value if i == j else (ONE if j == i + 1 else ZERO) for j in range(size)]
        for i in range(size)
    ])


def a57_diag(label: GeometryLabel | None = None) -> LieAlgebra:
    roots = [1, 2, 3, -6]
    if isinstance(label, Sol5Diag) and label.roots is not None:
        roots = _rational_params(label.roots)
    if sum(roots) != 0:
        raise InvalidParameter(f"roots {roots} do not sum to zero")
    return r4_semidirect(Mat.diag(roots))


def a57_complex(label: GeometryLabel | None = None) -> LieAlgebra:
    r1, r2, a, b = ONE, -ONE, ZERO, ONE
    if isinstance(label, Sol5Complex) and label.real_roots is not None:
        r1, r2 = _rational_params(label.real_roots)
        a, b = _rational_params([label.complex_real_part, label.complex_imag_part])
    if r1 + r2 + 2 * a != 0:
        raise InvalidParameter("the action must be traceless")
    if b == 0:
        raise InvalidParameter("the complex pair needs a nonzero imaginary part")
    rotation = Mat.from_rows([[a, -b], [b, a]])
    return r4_semidirect(Mat.block_diag(rotation, Mat.diag([r1, r2])))


def a57_pairs() -> LieAlgebra:
    # (x-1, x-1, x+1, x+1)
    return r4_semidirect(Mat.diag([1, 1, -1, -1]))


def a58() -> LieAlgebra:
    # (x^2, x-1, x+1)
    return r4_semidirect(Mat.block_diag(_jordan(0, 2), Mat.diag([1, -1])))


def a59() -> LieAlgebra:
    # ((x-1)^2, x+1, x+1)
    return r4_semidirect(Mat.block_diag(_jordan(1, 2), Mat.diag([-1, -1])))


def a515() -> LieAlgebra:
    # ((x-1)^2, (x+1)^2)
    return r4_semidirect(Mat.block_diag(_jordan(1, 2), _jordan(-1, 2)))


def a520() -> LieAlgebra:
    # (R x Heis_3) x| (Lorentz, y -> x_1)
    return _alg(
        5,
        {(2, 3): {1: 1}, (4, 2): {2: 1}, (4, 3): {3: -1}, (4, 0): {1: 1}},
        ("y", "x1", "x2", "x3", "t"),
    )


def a533() -> LieAlgebra:
    # R^3 x| {xyz = 1}^0: two commuting traceless diagonal derivations
    return _alg(5, {(3, 0): {0: 1}, (3, 1): {1: -1}, (4, 1): {1: 1}, (4, 2): {2: -1}})


def nil4_x_e() -> LieAlgebra:
    # R^4 x| (x^3, x): e4 is the Euclidean factor
    return _alg(5, {(4, 0): {1: 1}, (4, 1): {2: 1}})


def sol40_x_e() -> LieAlgebra:
    return r4_semidirect(Mat.diag([1, 1, -2, 0]))


def sol41_x_e() -> LieAlgebra:
    # Heis_3 x| R with t acting by diag(1, -1, 0), times a central e
    return _alg(5, {(0, 1): {2: 1}, (4, 0): {0: 1}, (4, 1): {1: -1}}, ("a", "b", "c", "e", "t"))


def sol4mn_x_e(label: GeometryLabel | None = None) -> LieAlgebra:
    roots = [1, 2, -3]
    if isinstance(label, Sol4mnxE):
        if label.roots is not None:
            roots = [r for r in _rational_params(label.roots) if r != 0]
        elif label.m is not None:
            raise InvalidParameter("Sol^4_{m,n} with integer (m, n) has irrational structure constants")
    if len(roots) != 3 or sum(roots) != 0 or len(set(roots)) != 3:
        raise InvalidParameter(f"need three distinct nonzero roots summing to zero, got {roots}")
    return r4_semidirect(Mat.diag([*roots, 0]))


def sol3_x_e2() -> LieAlgebra:
    return r4_semidirect(Mat.diag([1, -1, 0, 0]))


def heis3() -> LieAlgebra:
    # normalization from the law z + z' + xy' - x'y
    return _alg(3, {(0, 1): {2: 2}}, ("x", "y", "z"))


def heis3_x_e2() -> LieAlgebra:
    return _alg(5, {(0, 1): {2: 2}}, ("x", "y", "z", "u", "v"))


def sl2_x_e2() -> LieAlgebra:
    return _alg(5, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, ("h", "e", "f", "u", "v"))


def su2_x_e2() -> LieAlgebra:
    return _alg(5, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}, ("i", "j", "k", "u", "v"))


def r2_x_sl2() -> LieAlgebra:
    # sl_2 acting on R^2 by its standard representation
    return _alg(
        5,
        {
            (0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1},
            (0, 3): {3: 1}, (0, 4): {4: -1}, (1, 4): {3: 1}, (2, 3): {4: 1},
        },
        ("h", "e", "f", "u", "v"),
    )


def aff_x_r3() -> LieAlgebra:
    """
    Aff(R) + R^3, [e1, e2] = e2: solvable but not unimodular, so not in the catalog
    """
    return _alg(5, {(0, 1): {1: 1}})


def _rational_params(values) -> list[Fraction]:
    try:
        return [parse_rat(v) for v in values]
    except InputFormatError as exc:
        raise InvalidParameter(f"exact structure constants need rational parameters, got {list(values)}") from exc


def _fixed(builder: Callable[[], LieAlgebra]) -> Constructor:
    return lambda _label: builder()


# Catalog entries

@dataclass(frozen=True)
class IsotropyRow:
    """
    Row of the irreducible 4-dimensional isotropy table: base and column
    """
    base: str
    column: Literal["flat", "curved"]


@dataclass(frozen=True)
class AtlasEntry:
    label: GeometryLabel
    category: int
    stabilizer: str
    is_lie_group: bool = False
    constructor: Constructor | None = field(default=None, repr=False, compare=False)
    model: bool = True
    maximal: bool = True
    is_product: bool = False
    group: str = ""
    notes: tuple[str, ...] = ()
    aliases: tuple[str, ...] = ()
    factors: tuple[str, ...] = ()
    isotropy_row: IsotropyRow | None = None

    @property
    def name(self) -> str:
        return str(self.label)

    @property
    def is_family(self) -> bool:
        return self.label.is_family


@dataclass(frozen=True)
class Factor:
    name: str
    dim: int
    stabilizer: str
    euclidean: bool = False
    family: bool = False


FACTORS: tuple[Factor, ...] = (
    Factor("E", 1, "1", euclidean=True),
    Factor("E^2", 2, "SO(2)", euclidean=True),
    Factor("S^2", 2, "SO(2)"),
    Factor("H^2", 2, "SO(2)"),
    Factor("E^3", 3, "SO(3)", euclidean=True),
    Factor("S^3", 3, "SO(3)"),
    Factor("H^3", 3, "SO(3)"),
    Factor("Heis_3", 3, "SO(2)"),
    Factor("Sol^3", 3, "1"),
    Factor("~SL_2", 3, "SO(2)"),
    Factor("E^4", 4, "SO(4)", euclidean=True),
    Factor("S^4", 4, "SO(4)"),
    Factor("H^4", 4, "SO(4)"),
    Factor("CP^2", 4, "U(2)"),
    Factor("CH^2", 4, "U(2)"),
    Factor("F^4", 4, "SO(2)"),
    Factor("Nil^4", 4, "1"),
    Factor("Sol^4_0", 4, "SO(2)"),
    Factor("Sol^4_1", 4, "1"),
    Factor("Sol^4_{m,n}", 4, "1", family=True),
)


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[Factor, ...]

    @property
    def name(self) -> str:
        return " x ".join(f.name for f in self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(f.dim for f in self.factors)

    @property
    def shape(self) -> str:
        return "x".join(str(d) for d in self.dims)

    @property
    def is_family(self) -> bool:
        return any(f.family for f in self.factors)

    @property
    def stabilizer(self) -> str:
        return product_stabilizer(self.factors)


def product_stabilizer(factors: tuple[Factor, ...]) -> str:
    """
    Point stabilizer of a product, as the product of the factor stabilizers
    """
    counts = Counter(f.stabilizer for f in factors if f.stabilizer != "1")
    if counts["SO(4)"]:
        return "SO(4)"
    if counts["U(2)"]:
        return "U(2)"
    if counts["SO(3)"] and counts["SO(2)"]:
        return "SO(3)xSO(2)"
    if counts["SO(3)"]:
        return "SO(3)"
    if counts["SO(2)"] >= 2:
        return "SO(2)xSO(2)"
    if counts["SO(2)"]:
        return "SO(2)"
    return "1"


def _partitions(total: int, largest: int) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    out = []
    for part in range(min(total, largest), 0, -1):
        out.extend((part, *rest) for rest in _partitions(total - part, part))
    return out


@lru_cache(maxsize=None)
def enumerate_products() -> tuple[ProductSpec, ...]:
    """
    Products of lower-dimensional geometries with at most one Euclidean factor
    (several Euclidean factors would merge into a non-maximal one)
    """
    by_dim = {d: [f for f in FACTORS if f.dim == d] for d in range(1, 5)}
    products = []
    for partition in _partitions(5, 4):
        if len(partition) < 2:
            continue
        parts = Counter(partition)
        choices = [
            list(itertools.combinations_with_replacement(by_dim[d], parts[d]))
            for d in sorted(parts, reverse=True)
        ]
        for combo in itertools.product(*choices):
            factors = tuple(f for group in combo for f in group)
            if sum(f.euclidean for f in factors) > 1:
                continue
            products.append(ProductSpec(factors))
    logger.debug("enumerate_products: %d products", len(products))
    return tuple(products)


_PRODUCT_CONSTRUCTORS: dict[str, Constructor] = {
    "Nil^4 x E": _fixed(nil4_x_e),
    "Sol^4_0 x E": _fixed(sol40_x_e),
    "Sol^4_1 x E": _fixed(sol41_x_e),
    "Sol^4_{m,n} x E": sol4mn_x_e,
    "S^3 x E^2": _fixed(su2_x_e2),
    "Heis_3 x E^2": _fixed(heis3_x_e2),
    "Sol^3 x E^2": _fixed(sol3_x_e2),
    "~SL_2 x E^2": _fixed(sl2_x_e2),
}

_PRODUCT_ALIASES = {
    "Nil^4 x E": ("R^4 ⋊ (x^3, x)",),
    "Sol^4_1 x E": ("Sol41xE",),
}

_ISOTROPY_ROWS = {
    "S^4 x E": IsotropyRow("S^4", "flat"),
    "H^4 x E": IsotropyRow("H^4", "flat"),
    "CP^2 x E": IsotropyRow("CP^2", "flat"),
    "CH^2 x E": IsotropyRow("CH^2", "flat"),
    "Heis_5": IsotropyRow("C^2", "curved"),
    "~U(2,1)/U(2)": IsotropyRow("CH^2", "curved"),
}

# base -> (flat column, curved column)
ISOTROPY_TABLE: dict[str, tuple[str, str | None]] = {
    "S^4": ("S^4 x E", None),
    "E^4": ("non-maximal E^5", None),
    "H^4": ("H^4 x E", None),
    "CP^2": ("CP^2 x E", "non-maximal S^5"),
    "C^2": ("non-maximal E^5", "Heis_5"),
    "CH^2": ("CH^2 x E", "~U(2,1)/U(2)"),
}


def _product_entry(spec: ProductSpec) -> AtlasEntry:
    name = spec.name
    label = Sol4mnxE() if spec.is_family else Named(name=name)
    constructor = _PRODUCT_CONSTRUCTORS.get(name)
    notes = ()
    if name == "S^3 x S^2":
        notes = ("T^1(S^3) = SO(4)/SO(2) is a non-maximal form of it and of L(1;1) x_S1 L(1;1)",)
    return AtlasEntry(
        label=label,
        category=8,
        stabilizer=spec.stabilizer,
        is_lie_group=constructor is not None,
        constructor=constructor,
        is_product=True,
        group=" x ".join(f"Isom({f.name})" for f in spec.factors),
        notes=notes,
        aliases=_PRODUCT_ALIASES.get(name, ()),
        factors=tuple(f.name for f in spec.factors),
        isotropy_row=_ISOTROPY_ROWS.get(name),
    )


def _named(name: str, category: int, stabilizer: str, **kwargs) -> AtlasEntry:
    return AtlasEntry(label=Named(name=name), category=category, stabilizer=stabilizer,
                      isotropy_row=_ISOTROPY_ROWS.get(name), **kwargs)


def _group(name: str, category: int, stabilizer: str, builder, group: str, **kwargs) -> AtlasEntry:
    return _named(name, category, stabilizer, is_lie_group=True, constructor=_fixed(builder),
                  group=group, **kwargs)


def _build_catalog() -> tuple[AtlasEntry, ...]:
    entries = [
        # 1. constant curvature
        _group("E^5", 1, "SO(5)", abelian5, "R^5 ⋊ SO(5)", aliases=("R^5",)),
        _named("S^5", 1, "SO(5)", group="SO(6)"),
        _named("H^5", 1, "SO(5)", group="SO(5,1)^0"),
        # 2. irreducible symmetric spaces
        _named("SL(3,R)/SO(3)", 2, "SO(3)_5", group="SL(3,R)"),
        _named("SU(3)/SO(3)", 2, "SO(3)_5", group="SU(3)"),
        # 3. unit tangent bundles and circle bundles
        _named("T^1(H^3)", 3, "S1_1", group="PSL(2,C)/SO(2)"),
        _named("T^1(E^{1,2})", 3, "S1_1", group="R^3 ⋊ SO(1,2)^0 / SO(2)"),
        _named("~U(2,1)/U(2)", 3, "U(2)", group="universal cover of U(2,1)/U(2)"),
        # 4. associated bundles
        _named("Heis_3 x_R S^3", 4, "SO(2)xSO(2)", group="(Heis_3 ⋊ ~SO(2)) x S^3 / R^2"),
        _named("Heis_3 x_R ~SL_2", 4, "SO(2)xSO(2)", group="(Heis_3 ⋊ ~SO(2)) x ~SL_2 / R^2"),
        AtlasEntry(SL2xS3(), 4, "SO(2)xSO(2)", group="~SL_2 x S^3 x R / R^2",
                   notes=("admits compact quotients iff alpha is rational", "0 < alpha < infinity")),
        AtlasEntry(SL2xSL2(), 4, "SO(2)xSO(2)", group="~SL_2 x ~SL_2 x R / R^2",
                   notes=("0 < alpha <= 1",)),
        AtlasEntry(LensBundle(), 4, "SO(2)xSO(2)", group="S^3 x S^3 x R / R^2",
                   notes=("0 < a <= b coprime", "every member is diffeomorphic to S^3 x S^2")),
        # 5. principal R-bundles over F^4
        _group("R^2 ⋊ ~SL_2", 5, "S1_{1/2}", r2_x_sl2, "(R^2 ⋊ ~SL_2) ⋊ SO(2)",
               aliases=("R^2 x| ~SL_2",),
               notes=("line bundle over F^4; distinguished from F^5_0, F^5_1 by connection curvature",)),
        _named("F^5_0", 5, "S1_{1/2}", group="Heis_3 ⋊ ~SL_2 / R",
               notes=("line bundle over F^4; distinguished by connection curvature",)),
        _named("F^5_1", 5, "S1_{1/2}", group="Heis_3 ⋊ ~SL_2 / R",
               notes=("line bundle over F^4; distinguished by connection curvature",)),
        # 6. nilpotent Lie groups
        _group("A5,1", 6, "S1_1", a51, "R^4 ⋊ (x^2, x^2)"),
        _group("A5,2", 6, "1", a52, "R^4 ⋊ (x^4)", aliases=("R^4 ⋊ x^4",)),
        _group("A5,3", 6, "S1_1", a53, "(R x Heis_3) ⋊ (x_3 -> x_2 -> y)"),
        _group("Heis_5", 6, "U(2)", heis5, "Heis_5 ⋊ U(2)", aliases=("A5,4", "Heis5")),
        _group("A5,5", 6, "1", a55, "Nil^4 ⋊ (3 -> 1)"),
        _group("A5,6", 6, "1", a56, "Nil^4 ⋊ (4 -> 3 -> 1)"),
        # 7. non-nilpotent solvable Lie groups
        AtlasEntry(Sol5Diag(), 7, "1", is_lie_group=True, constructor=a57_diag,
                   group="R^4 ⋊ (4 distinct real roots)",
                   notes=("e^A a semisimple integer matrix with 4 real eigenvalues",)),
        AtlasEntry(Sol5Complex(), 7, "SO(2)", is_lie_group=True, constructor=a57_complex,
                   group="R^4 ⋊ (2 complex, 2 distinct real)",
                   notes=("e^A a semisimple integer matrix with 2 real eigenvalues",)),
        _group("A5,7^{1,-1,-1}", 7, "SO(2)xSO(2)", a57_pairs, "R^4 ⋊ (x-1, x-1, x+1, x+1)"),
        _group("A5,8^{-1}", 7, "1", a58, "R^4 ⋊ (x^2, x-1, x+1)", aliases=("A5,8",)),
        _group("A5,9^{-1,-1}", 7, "SO(2)", a59, "R^4 ⋊ ((x-1)^2, x+1, x+1)", aliases=("A5,9",)),
        _group("A5,15^{-1}", 7, "1", a515, "R^4 ⋊ ((x-1)^2, (x+1)^2)", aliases=("A5,15",)),
        _group("A5,20^0", 7, "1", a520, "(R x Heis_3) ⋊ (Lorentz, y -> x_1)", aliases=("A5,20",)),
        _group("A5,33^{-1,-1}", 7, "1", a533, "R^3 ⋊ {xyz=1}^0",
               aliases=("A5,33", "R^3 ⋊ {xyz=1}^0")),
    ]
    entries.extend(_product_entry(spec) for spec in enumerate_products())
    return tuple(entries)


@lru_cache(maxsize=None)
def catalog() -> tuple[AtlasEntry, ...]:
    entries = _build_catalog()
    logger.debug("atlas: %d entries", len(entries))
    return entries


@lru_cache(maxsize=None)
def _index() -> dict[str, AtlasEntry]:
    index = {}
    for entry in catalog():
        index[entry.label.family] = entry
        for alias in entry.aliases:
            index[alias] = entry
    return index


def find(label: str | GeometryLabel) -> tuple[AtlasEntry, GeometryLabel]:
    """
    Catalog entry for a name, alias, family name or family member, together with
    the parsed label (which keeps family parameters)
    """
    parsed = parse_label(label) if isinstance(label, str) else label
    key = str(parsed) if isinstance(parsed, Named) else parsed.family
    entry = _index().get(key)
    if entry is None:
        raise UnknownLabel(f"unknown geometry {str(label)!r}")
    if isinstance(parsed, Named):
        parsed = entry.label
    return entry, parsed


def list_entries(
    category: int | None = None,
    stabilizer: str | None = None,
    entries: Iterable[AtlasEntry] | None = None,
) -> list[AtlasEntry]:
    if category is not None and category not in range(1, 9):
        raise UnknownLabel(f"unknown category {category}")
    wanted = parse_stabilizer(stabilizer) if stabilizer is not None else None
    return [
        e for e in (catalog() if entries is None else entries)
        if (category is None or e.category == category)
        and (wanted is None or parse_stabilizer(e.stabilizer) == wanted)
    ]


def counts() -> tuple[int, int]:
    """
    (individual geometries, families)
    """
    families = sum(e.is_family for e in catalog())
    return len(catalog()) - families, families


def category_counts() -> dict[int, tuple[int, int]]:
    out = {c: (0, 0) for c in range(1, 9)}
    for e in catalog():
        individual, families = out[e.category]
        out[e.category] = (individual + (not e.is_family), families + e.is_family)
    return out


def build_algebra(label: str | GeometryLabel) -> LieAlgebra:
    entry, parsed = find(label)
    if not entry.is_lie_group or entry.constructor is None:
        raise NotAGroup(f"{entry.name} is not a Lie group geometry")
    return entry.constructor(parsed)


@dataclass(frozen=True)
class Metadata:
    label: str
    category: int
    stabilizer: str
    stabilizer_dim: int
    is_lie_group: bool
    is_product: bool
    model: bool
    maximal: bool
    group: str
    isotropy_row: IsotropyRow | None
    compact_quotients: bool | None
    notes: tuple[str, ...]


def metadata(label: str | GeometryLabel) -> Metadata:
    entry, parsed = find(label)
    stabilizer = parse_stabilizer(entry.stabilizer)
    return Metadata(
        label=str(parsed),
        category=entry.category,
        stabilizer=str(stabilizer),
        stabilizer_dim=stabilizer.dim,
        is_lie_group=entry.is_lie_group,
        is_product=entry.is_product,
        model=entry.model,
        maximal=entry.maximal,
        group=entry.group,
        isotropy_row=entry.isotropy_row,
        compact_quotients=parsed.compact_quotients if isinstance(parsed, SL2xS3) else None,
        notes=entry.notes,
    )


# The ten leaves of the identification key, in tree order
KEY_LEAVES: tuple[str, ...] = (
    "A5,2",
    "Nil^4 x E",
    "A5,6",
    "A5,5",
    "A5,33^{-1,-1}",
    "A5,15^{-1}",
    "A5,8^{-1}",
    Sol5Diag.FAMILY,
    "A5,20^0",
    "Sol^4_1 x E",
)
