"""
Geometry labels: named geometries and the six parametrized families.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Annotated, ClassVar, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from geo5.errors import InputFormatError, InvalidParameter
from geo5.exact import parse_rat


IRRATIONAL = "irrational"


def format_param(value: Fraction | float | int) -> str:
    """
    Family parameters are stored as strings: exact "p/q" or a 12-digit float
    """
    if isinstance(value, float):
        text = f"{value:.12g}"
        return "0" if text == "-0" else text
    return str(Fraction(value))


def _parse_alpha(text: str) -> Fraction | None:
    if text == IRRATIONAL:
        return None
    try:
        return parse_rat(text)
    except InputFormatError as exc:
        raise InvalidParameter(f"alpha must be 'p/q' or {IRRATIONAL!r}, got {text!r}") from exc


class _Label(BaseModel):
    model_config = ConfigDict(frozen=True)

    @property
    def is_family(self) -> bool:
        return False

    @property
    def family(self) -> str:
        return str(self)


class Named(_Label):
    kind: Literal["named"] = "named"
    name: str = Field(..., description="Canonical geometry name")

    def __str__(self) -> str:
        return self.name


class LensBundle(_Label):
    """
    L(a;1) x_S1 L(b;1), 0 < a <= b coprime
    """
    kind: Literal["lens_bundle"] = "lens_bundle"
    a: int | None = None
    b: int | None = None

    FAMILY: ClassVar[str] = "L(a;1) x_S1 L(b;1)"

    @model_validator(mode="after")
    def _check(self):
        if (self.a is None) != (self.b is None):
            raise InvalidParameter("lens bundle needs both a and b")
        if self.a is not None:
            if not 0 < self.a <= self.b:
                raise InvalidParameter(f"need 0 < a <= b, got a={self.a}, b={self.b}")
            if math.gcd(self.a, self.b) != 1:
                raise InvalidParameter(f"a={self.a} and b={self.b} are not coprime")
        return self

    @property
    def is_family(self) -> bool:
        return self.a is None

    @property
    def family(self) -> str:
        return self.FAMILY

    def __str__(self) -> str:
        if self.a is None:
            return self.FAMILY
        return f"L({self.a};1) x_S1 L({self.b};1)"


class SL2xS3(_Label):
    """
    ~SL_2 x_alpha S^3, alpha > 0; compact quotients exist iff alpha is rational
    """
    kind: Literal["sl2_x_s3"] = "sl2_x_s3"
    alpha: str | None = None

    FAMILY: ClassVar[str] = "~SL_2 x_alpha S^3"

    @model_validator(mode="after")
    def _check(self):
        if self.alpha is not None:
            value = _parse_alpha(self.alpha)
            if value is not None and value <= 0:
                raise InvalidParameter(f"alpha must be positive, got {self.alpha}")
        return self

    @property
    def is_family(self) -> bool:
        return self.alpha is None

    @property
    def family(self) -> str:
        return self.FAMILY

    @property
    def compact_quotients(self) -> bool | None:
        if self.alpha is None:
            return None
        return self.alpha != IRRATIONAL

    def __str__(self) -> str:
        return self.FAMILY if self.alpha is None else f"~SL_2 x_{{{self.alpha}}} S^3"


class SL2xSL2(_Label):
    """
    ~SL_2 x_alpha ~SL_2, 0 < alpha <= 1
    """
    kind: Literal["sl2_x_sl2"] = "sl2_x_sl2"
    alpha: str | None = None

    FAMILY: ClassVar[str] = "~SL_2 x_alpha ~SL_2"

    @model_validator(mode="after")
    def _check(self):
        if self.alpha is not None:
            value = _parse_alpha(self.alpha)
            if value is not None and not 0 < value <= 1:
                raise InvalidParameter(f"need 0 < alpha <= 1, got {self.alpha}")
        return self

    @property
    def is_family(self) -> bool:
        return self.alpha is None

    @property
    def family(self) -> str:
        return self.FAMILY

    def __str__(self) -> str:
        return self.FAMILY if self.alpha is None else f"~SL_2 x_{{{self.alpha}}} ~SL_2"


class Sol5Diag(_Label):
    """
    R^4 x| R with four distinct real nonzero roots, normalized so the largest is 1
    """
    kind: Literal["sol5_diag"] = "sol5_diag"
    roots: tuple[str, ...] | None = Field(None, description="Normalized roots, descending")

    FAMILY: ClassVar[str] = "A5,7^{a,b,-1-a-b}"

    @model_validator(mode="after")
    def _check(self):
        if self.roots is not None and len(self.roots) != 4:
            raise InvalidParameter(f"expected 4 roots, got {len(self.roots)}")
        return self

    @property
    def is_family(self) -> bool:
        return self.roots is None

    @property
    def family(self) -> str:
        return self.FAMILY

    def __str__(self) -> str:
        return self.FAMILY if self.roots is None else f"{self.FAMILY}({', '.join(self.roots)})"


class Sol5Complex(_Label):
    """
    R^4 x| R with two distinct real roots and a complex pair
    """
    kind: Literal["sol5_complex"] = "sol5_complex"
    real_roots: tuple[str, ...] | None = Field(None, description="Normalized real roots, descending")
    complex_real_part: str | None = Field(None, description="Real part of the complex pair, same scale")
    complex_imag_part: str | None = Field(None, description="Positive imaginary part of the complex pair")

    FAMILY: ClassVar[str] = "A5,7^{1,-1-a,-1+a}"

    @model_validator(mode="after")
    def _check(self):
        given = [v is not None for v in (self.real_roots, self.complex_real_part, self.complex_imag_part)]
        if any(given) and not all(given):
            raise InvalidParameter("give the real roots and both parts of the complex pair, or none")
        if self.real_roots is not None and len(self.real_roots) != 2:
            raise InvalidParameter(f"expected 2 real roots, got {len(self.real_roots)}")
        return self

    @property
    def is_family(self) -> bool:
        return self.real_roots is None

    @property
    def family(self) -> str:
        return self.FAMILY

    def __str__(self) -> str:
        if self.real_roots is None:
            return self.FAMILY
        return (
            f"{self.FAMILY}({', '.join(self.real_roots)}; "
            f"{self.complex_real_part} +- {self.complex_imag_part}i)"
        )


class Sol4mnxE(_Label):
    """
    Sol^4_{m,n} x E; (m, n) are the middle coefficients of an integer
    characteristic polynomial when known, roots are the normalized action roots
    """
    kind: Literal["sol4mn_x_e"] = "sol4mn_x_e"
    m: int | None = None
    n: int | None = None
    roots: tuple[str, ...] | None = None

    FAMILY: ClassVar[str] = "Sol^4_{m,n} x E"

    @model_validator(mode="after")
    def _check(self):
        if (self.m is None) != (self.n is None):
            raise InvalidParameter("give both m and n, or neither")
        if self.m is not None and (self.m < 1 or self.n < 1):
            raise InvalidParameter(f"m and n must be positive, got m={self.m}, n={self.n}")
        return self

    @property
    def is_family(self) -> bool:
        return self.m is None and self.roots is None

    @property
    def family(self) -> str:
        return self.FAMILY

    def __str__(self) -> str:
        if self.m is not None:
            return f"Sol^4_{{{self.m},{self.n}}} x E"
        if self.roots is not None:
            return f"{self.FAMILY}({', '.join(self.roots)})"
        return self.FAMILY


GeometryLabel = Annotated[
    Union[Named, LensBundle, SL2xS3, SL2xSL2, Sol5Diag, Sol5Complex, Sol4mnxE],
    Field(discriminator="kind"),
]

label_adapter: TypeAdapter[GeometryLabel] = TypeAdapter(GeometryLabel)

FAMILY_TYPES = (LensBundle, SL2xS3, SL2xSL2, Sol5Diag, Sol5Complex, Sol4mnxE)


_INSTANCE_PATTERNS = [
    (re.compile(r"^L\((\d+);1\) x_S1 L\((\d+);1\)$"), lambda m: LensBundle(a=int(m[1]), b=int(m[2]))),
    (re.compile(r"^~SL_2 x_\{(.+)\} S\^3$"), lambda m: SL2xS3(alpha=m[1])),
    (re.compile(r"^~SL_2 x_\{(.+)\} ~SL_2$"), lambda m: SL2xSL2(alpha=m[1])),
    (re.compile(r"^Sol\^4_\{(\d+),(\d+)\} x E$"), lambda m: Sol4mnxE(m=int(m[1]), n=int(m[2]))),
    (re.compile(r"^A5,7\^\{a,b,-1-a-b\}\((.+)\)$"),
     lambda m: Sol5Diag(roots=[s.strip() for s in m[1].split(",")])),
]


def parse_label(text: str) -> GeometryLabel:
    """
    Reads a canonical label string; family names without parameters give the
    family label itself, anything else is treated as a geometry name
    """
    text = text.strip()
    for family in FAMILY_TYPES:
        if text == family.FAMILY:
            return family()
    for pattern, build in _INSTANCE_PATTERNS:
        match = pattern.match(text)
        if match:
            return build(match)
    return Named(name=text)
