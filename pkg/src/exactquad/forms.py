"""General, standard and factored quadratics with exact conversions.

All three representations share the lead coefficient ``a``::

    a*x**2 + b*x + c  ==  a*(x - h)**2 + k  ==  a*(x - r)*(x - s)

with ``h = -b/(2a)``, ``k = (4ac - b**2)/(4a)`` and ``r, s = h -+ z`` where
``z**2 = (b**2 - 4ac)/(4a**2)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactRoot, Scalar, as_rational, format_rational, parse_rational


class DegenerateQuadraticError(ValueError):
    """Lead coefficient is zero."""


class NonRationalCoefficientError(ValueError):
    """Roots whose sum or product leaves Q."""


def _lead(a: Scalar) -> Fraction:
    a = as_rational(a)
    if a == 0:
        raise DegenerateQuadraticError("lead coefficient a must be nonzero")
    return a


@dataclass(frozen=True)
class GeneralForm:
    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _lead(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        object.__setattr__(self, "c", as_rational(self.c))

    def __call__(self, x: ExactRoot | Scalar) -> ExactRoot:
        return evaluate(self, x)

    def to_json(self) -> dict[str, str]:
        return {k: format_rational(getattr(self, k)) for k in "abc"}

    @classmethod
    def from_json(cls, obj: dict[str, str]) -> GeneralForm:
        return cls(*(parse_rational(obj[k]) for k in "abc"))

    def __str__(self) -> str:
        return pretty_print(self)


@dataclass(frozen=True)
class StandardForm:
    a: Fraction
    h: Fraction = Fraction(0)
    k: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _lead(self.a))
        object.__setattr__(self, "h", as_rational(self.h))
        object.__setattr__(self, "k", as_rational(self.k))

    @property
    def vertex(self) -> tuple[Fraction, Fraction]:
        return self.h, self.k

    def to_json(self) -> dict[str, str]:
        return {k: format_rational(getattr(self, k)) for k in "ahk"}

    @classmethod
    def from_json(cls, obj: dict[str, str]) -> StandardForm:
        return cls(*(parse_rational(obj[k]) for k in "ahk"))

    def __str__(self) -> str:
        return pretty_print(self)


@dataclass(frozen=True)
class FactoredForm:
    """``a*(x - r)*(x - s)``; ``r + s`` and ``r*s`` must be rational."""

    a: Fraction
    r: ExactRoot
    s: ExactRoot

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _lead(self.a))
        object.__setattr__(self, "r", ExactRoot.coerce(self.r))
        object.__setattr__(self, "s", ExactRoot.coerce(self.s))
        # raises MixedRadicandError for roots in different fields
        total, product = self.r + self.s, self.r * self.s
        if not (total.is_rational and product.is_rational):
            raise NonRationalCoefficientError(
                f"roots {self.r} and {self.s} do not give rational coefficients"
            )

    def to_json(self) -> dict[str, object]:
        return {"a": format_rational(self.a), "r": self.r.to_json(), "s": self.s.to_json()}

    @classmethod
    def from_json(cls, obj: dict[str, object]) -> FactoredForm:
        return cls(
            parse_rational(str(obj["a"])),
            ExactRoot.from_json(obj["r"]),  # type: ignore[arg-type]
            ExactRoot.from_json(obj["s"]),  # type: ignore[arg-type]
        )

    def __str__(self) -> str:
        return pretty_print(self)


class RootCase(enum.Enum):
    TWO_REAL_ROOTS = "TwoRealRoots"
    DOUBLE_ROOT = "DoubleRoot"
    CONJUGATE_PAIR = "ConjugatePair"

    @property
    def real_root_count(self) -> int:
        return {"TwoRealRoots": 2, "DoubleRoot": 1, "ConjugatePair": 0}[self.value]


@dataclass(frozen=True)
class DiscriminantClass:
    delta: Fraction
    case: RootCase

    def to_json(self) -> dict[str, str]:
        return {"delta": format_rational(self.delta), "case": self.case.value}


def discriminant(q: GeneralForm) -> DiscriminantClass:
    delta = q.b * q.b - 4 * q.a * q.c
    if delta > 0:
        case = RootCase.TWO_REAL_ROOTS
    elif delta == 0:
        case = RootCase.DOUBLE_ROOT
    else:
        case = RootCase.CONJUGATE_PAIR
    return DiscriminantClass(delta, case)


def to_standard(q: GeneralForm) -> StandardForm:
    a, b, c = q.a, q.b, q.c
    return StandardForm(a, -b / (2 * a), (4 * a * c - b * b) / (4 * a))


def expand_standard(sf: StandardForm) -> GeneralForm:
    a, h, k = sf.a, sf.h, sf.k
    return GeneralForm(a, -2 * a * h, a * h * h + k)


def symmetric_offset(q: GeneralForm) -> ExactRoot:
    """Half the distance between the roots, ``z = sqrt(delta) / (2|a|)``.

    Real and non-negative when ``delta >= 0``, otherwise ``i`` times a
    positive real.
    """
    return ExactRoot.sqrt(discriminant(q).delta / (4 * q.a * q.a))


def to_factored(q: GeneralForm) -> FactoredForm:
    h = -q.b / (2 * q.a)
    z = symmetric_offset(q)
    return FactoredForm(q.a, h - z, h + z)


def expand_factored(f: FactoredForm) -> GeneralForm:
    total, product = f.r + f.s, f.r * f.s
    if not (total.is_rational and product.is_rational):
        raise NonRationalCoefficientError(f"roots {f.r}, {f.s} do not expand over Q")
    return GeneralForm(f.a, -f.a * total.rational_part, f.a * product.rational_part)


def solve_prod_sum(alpha: Scalar, beta: Scalar) -> tuple[ExactRoot, ExactRoot]:
    """Find ``r, s`` with ``r*s == alpha`` and ``r + s == beta``.

    They are the roots of ``x**2 - beta*x + alpha``.
    """
    f = to_factored(GeneralForm(1, -as_rational(beta), as_rational(alpha)))
    return f.r, f.s


def evaluate(q: GeneralForm, x: ExactRoot | Scalar) -> ExactRoot:
    x = ExactRoot.coerce(x)
    return (x * q.a + q.b) * x + q.c


# -- pretty printing ------------------------------------------------------

_MINUS = "−"


def _num(x: Fraction, ascii: bool) -> str:
    text = str(x)
    if x < 0:
        text = ("-" if ascii else _MINUS) + text[1:]
        return f"({text})"
    return text


def _general_terms(a: Fraction, b: Fraction, c: Fraction, ascii: bool) -> str:
    sq, dot, minus = ("^2", "*", "-") if ascii else ("²", "·", _MINUS)
    parts: list[str] = []
    for coef, var in ((a, "x" + sq), (b, "x"), (c, "")):
        if coef == 0:
            continue
        mag = abs(coef)
        if var and mag == 1:
            body = var
        elif var:
            body = f"{mag}{dot}{var}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if coef > 0 else f"{minus}{body}")
        else:
            parts.append(f"{'+' if coef > 0 else minus} {body}")
    return " ".join(parts)


def pretty_print(form: GeneralForm | StandardForm | FactoredForm, ascii: bool = False) -> str:
    """Human-readable rendering; general forms parse back exactly.

    >>> pretty_print(StandardForm(1, 1, -3))
    '1·(x − 1)² + (−3)'
    """
    sq, dot, minus = ("^2", "*", "-") if ascii else ("²", "·", _MINUS)
    if isinstance(form, GeneralForm):
        return _general_terms(form.a, form.b, form.c, ascii)
    if isinstance(form, StandardForm):
        return f"{_num(form.a, ascii)}{dot}(x {minus} {_num(form.h, ascii)}){sq} + {_num(form.k, ascii)}"
    if isinstance(form, FactoredForm):
        return f"{_num(form.a, ascii)}{dot}(x {minus} ({form.r})){dot}(x {minus} ({form.s}))"
    raise TypeError(f"cannot print {type(form).__name__}")
