"""Point correspondence for ``f(x) = A*g(B*x + C) + D``.

A parent point ``(t, s)`` on ``s = g(t)`` lands on ``((t - C)/B, A*s + D)``.
Scalars may be exact (``int``/``Fraction``) or ``float``; nothing here
evaluates ``g`` itself.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .exact import format_rational
from .forms import StandardForm

Number = Union[int, Fraction, float]


class Point(NamedTuple):
    first: Number
    second: Number


@dataclass(frozen=True)
class Transformation:
    A: Number
    B: Number
    C: Number = 0
    D: Number = 0

    def __post_init__(self) -> None:
        if self.A == 0 or self.B == 0:
            raise ValueError("scaling constants A and B must be nonzero")

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(v, float) for v in (self.A, self.B, self.C, self.D))

    def __call__(self, p: Point | tuple[Number, Number]) -> Point:
        return map_point(self, p)


def _div(x: Number, y: Number) -> Number:
    # keep the exact path exact: int/int must not become float
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return Fraction(x) / Fraction(y)
    return x / y


def map_point(tr: Transformation, p: Point | tuple[Number, Number]) -> Point:
    t, s = p
    return Point(_div(t - tr.C, tr.B), tr.A * s + tr.D)


def unmap_point(tr: Transformation, p: Point | tuple[Number, Number]) -> Point:
    x, y = p
    return Point(tr.B * x + tr.C, _div(y - tr.D, tr.A))


def map_table(tr: Transformation, pts: Iterable[Point | tuple[Number, Number]]) -> list[Point]:
    return [map_point(tr, p) for p in pts]


def standard_to_transformation(sf: StandardForm) -> Transformation:
    """``a*(x - h)**2 + k`` as a transform of ``g(t) = t**2``."""
    return Transformation(sf.a, 1, -sf.h, sf.k)


# -- CSV ------------------------------------------------------------------


def _exact_or_float(text: str) -> Number:
    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def read_points_csv(text: str, scalar: Callable[[str], Number] = _exact_or_float) -> list[Point]:
    """Parse ``t,s`` rows; blank lines and ``#`` comments are skipped.

    Cells go through ``scalar``; the default keeps literals such as ``1/2``
    or ``0.25`` exact. A leading header row that fails to parse is ignored.
    """
    pts: list[Point] = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), 1):
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 2:
            raise ValueError(f"line {lineno}: expected 2 columns, got {len(row)}")
        try:
            pts.append(Point(scalar(row[0]), scalar(row[1])))
        except ValueError:
            if not pts and lineno == 1:
                continue
            raise ValueError(f"line {lineno}: not a number pair: {','.join(row)!r}") from None
    return pts


def format_scalar(v: Number) -> str:
    if isinstance(v, float):
        return format(v, ".15g")
    return format_rational(Fraction(v))


def write_points_csv(pts: Sequence[Point]) -> str:
    return "".join(f"{format_scalar(x)},{format_scalar(y)}\n" for x, y in pts)
