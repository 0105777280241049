"""
Closed connected subgroups of SO(5) up to conjugacy, ordered by inclusion,
and the lookup of non-product geometries by point stabilizer.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from geo5.errors import InputFormatError, UnknownStabilizer
from geo5.exact import parse_rat


# node key -> group dimension
NODES: dict[str, int] = {
    "SO(5)": 10,
    "SO(4)": 6,
    "SO(3)xSO(2)": 4,
    "SO(3)_5": 3,
    "U(2)": 4,
    "SU(2)": 3,
    "SO(3)": 3,
    "SO(2)xSO(2)": 2,
    "S1_1": 1,
    "S1_{m/n}": 1,
    "SO(2)": 1,
    "S1_{1/2}": 1,
    "1": 0,
}

# (larger, smaller) covering pairs
EDGES: tuple[tuple[str, str], ...] = (
    ("SO(5)", "SO(4)"), ("SO(4)", "U(2)"), ("U(2)", "SU(2)"), ("SU(2)", "S1_1"), ("S1_1", "1"),
    ("SO(5)", "SO(3)xSO(2)"), ("SO(3)xSO(2)", "SO(3)"), ("SO(3)", "SO(2)"), ("SO(2)", "1"),
    ("SO(5)", "SO(3)_5"), ("SO(3)_5", "S1_{1/2}"), ("S1_{1/2}", "1"),
    ("SO(4)", "SO(3)"),
    ("SO(3)xSO(2)", "SO(2)xSO(2)"), ("SO(2)xSO(2)", "SO(2)"),
    ("U(2)", "SO(2)xSO(2)"), ("SO(2)xSO(2)", "S1_1"),
    ("SO(2)xSO(2)", "S1_{m/n}"), ("S1_{m/n}", "1"),
    ("SO(2)xSO(2)", "S1_{1/2}"),
)

_ALIASES = {
    "SO(3)×SO(2)": "SO(3)xSO(2)",
    "SO(2)×SO(2)": "SO(2)xSO(2)",
    "T^2": "SO(2)xSO(2)",
    "SO(3)₅": "SO(3)_5",
    "S1_0": "SO(2)",
    "S1_{0}": "SO(2)",
    "S1_{1}": "S1_1",
    "{1}": "1",
    "trivial": "1",
}

_CIRCLE = re.compile(r"^S1_\{?([-0-9/]+)\}?$")


@dataclass(frozen=True, slots=True)
class Stabilizer:
    """
    A node of the subgroup poset; circles S1_{m/n} off the named values carry their ratio
    """
    node: str
    ratio: Fraction | None = None

    @property
    def dim(self) -> int:
        return NODES[self.node]

    def __str__(self) -> str:
        if self.ratio is not None:
            return f"S1_{{{self.ratio}}}"
        return self.node


def _circle(ratio: Fraction) -> Stabilizer:
    # S1_{m/n} and S1_{n/m} are conjugate
    ratio = abs(ratio)
    if ratio > 1:
        ratio = 1 / ratio
    if ratio == 0:
        return Stabilizer("SO(2)")
    if ratio == 1:
        return Stabilizer("S1_1")
    if ratio == Fraction(1, 2):
        return Stabilizer("S1_{1/2}")
    return Stabilizer("S1_{m/n}", ratio)


def parse_stabilizer(text: str | Stabilizer) -> Stabilizer:
    if isinstance(text, Stabilizer):
        return text
    key = text.strip().replace(" ", "")
    key = _ALIASES.get(key, key)
    if key in NODES:
        return Stabilizer(key)
    match = _CIRCLE.match(key)
    if match:
        try:
            return _circle(parse_rat(match[1]))
        except (InputFormatError, ZeroDivisionError):
            pass
    raise UnknownStabilizer(f"unknown stabilizer {text!r}")


@lru_cache(maxsize=None)
def _below(node: str) -> frozenset[str]:
    """
    All nodes reachable downward from `node`, itself included
    """
    reach = {node}
    for upper, lower in EDGES:
        if upper == node:
            reach |= _below(lower)
    return frozenset(reach)


def contains(a: str | Stabilizer, b: str | Stabilizer) -> bool:
    """
    Whether b is (conjugate to) a subgroup of a
    """
    a, b = parse_stabilizer(a), parse_stabilizer(b)
    if b.node not in _below(a.node):
        return False
    if a.node == b.node == "S1_{m/n}":
        return a.ratio is None or b.ratio is None or a.ratio == b.ratio
    return True


def dims() -> dict[str, int]:
    return dict(NODES)


def nodes() -> list[Stabilizer]:
    return [Stabilizer(key) for key in NODES]


def geometries_with_stabilizer(s: str | Stabilizer) -> list[str]:
    """
    Non-product geometries whose point stabilizer is s
    """
    from geo5.atlas import catalog

    s = parse_stabilizer(s)
    return [
        str(entry.label) for entry in catalog()
        if not entry.is_product and parse_stabilizer(entry.stabilizer) == s
    ]
