"""Exact rationals and elements of quadratic fields Q(sqrt(d)).

``Rational`` is :class:`fractions.Fraction`. ``ExactRoot`` holds
``q + t*sqrt(d)`` with ``d`` squarefree; a negative ``d`` stands for
``q + t*i*sqrt(|d|)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .ntheory import squarefree_split

Rational = Fraction
Scalar = Union[int, Fraction]


class MixedRadicandError(ValueError):
    """Operands live in different quadratic fields."""


def as_rational(x: Scalar | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an int, Fraction or rational string, got {type(x).__name__}")


def rational_arith(x: Fraction, y: Fraction, op: str) -> Fraction:
    """Apply ``op`` (one of ``+ - * /``, or ``× ÷``) to two rationals exactly."""
    if op == "+":
        return x + y
    if op in ("-", "−"):
        return x - y
    if op in ("*", "×"):
        return x * y
    if op in ("/", "÷"):
        if y == 0:
            raise ZeroDivisionError("rational division by zero")
        return x / y
    raise ValueError(f"unknown operator {op!r}")


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n = sign(n) * outside**2 * |inside|`` with ``inside`` squarefree.

    The sign travels with ``inside``; zero maps to ``(0, 1)``.

    >>> squarefree_decompose(12)
    (2, 3)
    >>> squarefree_decompose(-4)
    (2, -1)
    """
    if n == 0:
        return 0, 1
    outside, inside = squarefree_split(abs(n))
    return outside, inside if n > 0 else -inside


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True, eq=False)
class ExactRoot:
    """``rational_part + radical_coeff * sqrt(radicand)``, kept canonical.

    Construction normalises: square factors of the radicand move into the
    coefficient, a perfect-square radicand folds into the rational part, and
    a zero coefficient forces ``radicand == 1``.
    """

    rational_part: Fraction
    radical_coeff: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self) -> None:
        q = as_rational(self.rational_part)
        t = as_rational(self.radical_coeff)
        d = self.radicand
        if not isinstance(d, int) or isinstance(d, bool):
            raise TypeError("radicand must be an int")
        if d == 0:
            t = Fraction(0)
        if t != 0 and d != 1 and d != -1:
            outside, d = squarefree_decompose(d)
            t *= outside
        if t != 0 and d == 1:
            q, t = q + t, Fraction(0)
        if t == 0:
            d = 1
        object.__setattr__(self, "rational_part", q)
        object.__setattr__(self, "radical_coeff", t)
        object.__setattr__(self, "radicand", d)

    # -- construction -----------------------------------------------------

    @classmethod
    def coerce(cls, x: ExactRoot | Scalar) -> ExactRoot:
        if isinstance(x, ExactRoot):
            return x
        return cls(as_rational(x))

    @classmethod
    def sqrt(cls, x: Scalar) -> ExactRoot:
        """Principal square root of a rational: ``sqrt(p/q) = sqrt(p*q)/q``.

        Numerator and denominator are decomposed separately so that the
        small denominator never gets folded into the hard factorization.
        """
        x = as_rational(x)
        if x == 0:
            return cls(Fraction(0))
        o1, d1 = squarefree_decompose(x.numerator)
        o2, d2 = squarefree_decompose(x.denominator)
        # d1, d2 squarefree: d1*d2 = g**2 * (d1/g)*(d2/g), the latter squarefree
        g = gcd(d1, d2)
        inside = (d1 // g) * (d2 // g)
        if inside == 1:
            return cls(Fraction(o1 * g, o2 * d2))
        return _canon(Fraction(0), Fraction(o1 * g, o2 * d2), inside)

    # -- predicates -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.radical_coeff == 0

    @property
    def is_real(self) -> bool:
        return self.radicand > 0

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.rational_part

    # -- arithmetic -------------------------------------------------------

    def _common(self, other: ExactRoot) -> tuple[Fraction, Fraction, int]:
        """Return ``other``'s radical coefficient rescaled onto ``self.radicand``."""
        if other.is_rational or self.is_rational or other.radicand == self.radicand:
            d = self.radicand if not self.is_rational else other.radicand
            return other.rational_part, other.radical_coeff, d
        d, e = self.radicand, other.radicand
        # same field iff d*e is a perfect square (possible only when a huge
        # radicand could not be fully reduced)
        if (d > 0) == (e > 0):
            r = isqrt(d * e)
            if r * r == d * e:
                return other.rational_part, other.radical_coeff * Fraction(r, abs(d)), d
        raise MixedRadicandError(f"cannot combine sqrt({d}) with sqrt({e})")

    def __add__(self, other: object) -> ExactRoot:
        if not isinstance(other, (ExactRoot, int, Fraction)):
            return NotImplemented
        other = ExactRoot.coerce(other)
        q, t, d = self._common(other)
        base_t = self.radical_coeff if not self.is_rational else Fraction(0)
        return _canon(self.rational_part + q, base_t + t, d)

    __radd__ = __add__

    def __neg__(self) -> ExactRoot:
        return _canon(-self.rational_part, -self.radical_coeff, self.radicand)

    def __pos__(self) -> ExactRoot:
        return self

    def __sub__(self, other: object) -> ExactRoot:
        if not isinstance(other, (ExactRoot, int, Fraction)):
            return NotImplemented
        return self + (-ExactRoot.coerce(other))

    def __rsub__(self, other: object) -> ExactRoot:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return ExactRoot.coerce(other) - self

    def __mul__(self, other: object) -> ExactRoot:
        if not isinstance(other, (ExactRoot, int, Fraction)):
            return NotImplemented
        other = ExactRoot.coerce(other)
        q2, t2, d = self._common(other)
        q1, t1 = self.rational_part, self.radical_coeff
        return _canon(q1 * q2 + t1 * t2 * d, q1 * t2 + q2 * t1, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """``x * conjugate(x) = q**2 - t**2 * d``."""
        q, t = self.rational_part, self.radical_coeff
        return q * q - t * t * self.radicand

    def inverse(self) -> ExactRoot:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        c = self.conjugate()
        return _canon(c.rational_part / n, c.radical_coeff / n, c.radicand)

    def __truediv__(self, other: object) -> ExactRoot:
        if not isinstance(other, (ExactRoot, int, Fraction)):
            return NotImplemented
        other = ExactRoot.coerce(other)
        self._common(other)
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> ExactRoot:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return ExactRoot.coerce(other) / self

    def __pow__(self, k: int) -> ExactRoot:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** -k
        result, base = ExactRoot(Fraction(1)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> ExactRoot:
        return _canon(self.rational_part, -self.radical_coeff, self.radicand)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational and self.rational_part == other
        if not isinstance(other, ExactRoot):
            return NotImplemented
        if self.rational_part != other.rational_part:
            return False
        t1, t2 = self.radical_coeff, other.radical_coeff
        if t1 == 0 or t2 == 0:
            return t1 == t2
        d1, d2 = self.radicand, other.radicand
        # t1*sqrt(d1) == t2*sqrt(d2): syntactic when canonical, this also
        # covers radicands that differ by an undetected square factor
        return (t1 > 0) == (t2 > 0) and (d1 > 0) == (d2 > 0) and t1 * t1 * d1 == t2 * t2 * d2

    def __hash__(self) -> int:
        t = self.radical_coeff
        return hash((self.rational_part, t > 0, t * t * self.radicand))

    def real_approx(self) -> complex:
        """Floating-point image, for plotting only."""
        rad = abs(self.radicand) ** 0.5 * float(self.radical_coeff)
        if self.radicand < 0:
            return complex(float(self.rational_part), rad)
        return complex(float(self.rational_part) + rad, 0.0)

    # -- text and JSON ----------------------------------------------------

    def __str__(self) -> str:
        q, t, d = self.rational_part, self.radical_coeff, self.radicand
        if t == 0:
            return str(q)
        if d == -1:
            unit = "i"
        elif d < 0:
            unit = f"i√{-d}"
        else:
            unit = f"√{d}"
        mag = abs(t)
        rad = unit if mag == 1 else f"{mag}·{unit}"
        if q == 0:
            return rad if t > 0 else f"-{rad}"
        return f"{q} {'+' if t > 0 else '-'} {rad}"

    def __repr__(self) -> str:
        return f"ExactRoot({self})"

    @classmethod
    def parse(cls, text: str) -> ExactRoot:
        """Inverse of ``str``: accepts ``1 - √3``, ``-2·i``, ``1/2 + 3·i√5``."""
        m = _ROOT_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not an exact root: {text!r}")
        q = Fraction(m["q"]) if m["q"] else Fraction(0)
        if m["unit"] is None:
            if m["sign"] or m["coef"]:
                raise ValueError(f"not an exact root: {text!r}")
            return cls(q)
        t = Fraction(m["coef"]) if m["coef"] else Fraction(1)
        if m["sign"] == "-":
            t = -t
        if m["i"]:
            d = -int(m["d"]) if m["d"] else -1
        else:
            d = int(m["rd"])
        return cls(q, t, d)

    def to_json(self) -> dict[str, object]:
        return {
            "q": format_rational(self.rational_part),
            "t": format_rational(self.radical_coeff),
            "d": self.radicand,
        }

    @classmethod
    def from_json(cls, obj: dict[str, object]) -> ExactRoot:
        return cls(parse_rational(str(obj["q"])), parse_rational(str(obj["t"])), int(obj["d"]))  # type: ignore[call-overload]


_ROOT_RE = re.compile(
    r"(?P<q>-?\d+(?:/\d+)?)?\s*"
    r"(?P<sign>[+-])?\s*"
    r"(?:(?P<coef>\d+(?:/\d+)?)·)?"
    r"(?P<unit>(?P<i>i)(?:√(?P<d>\d+))?|√(?P<rd>\d+))?"
)


def _canon(q: Fraction, t: Fraction, d: int) -> ExactRoot:
    """Build from a radicand already known to be reduced (skips factoring)."""
    x = object.__new__(ExactRoot)
    if t == 0:
        d = 1
    object.__setattr__(x, "rational_part", q)
    object.__setattr__(x, "radical_coeff", t)
    object.__setattr__(x, "radicand", d)
    return x


def ext_arith(x: ExactRoot, y: ExactRoot, op: str) -> ExactRoot:
    """Field operation in Q(sqrt(d)); ``op`` as for :func:`rational_arith`."""
    if op == "+":
        return x + y
    if op in ("-", "−"):
        return x - y
    if op in ("*", "×"):
        return x * y
    if op in ("/", "÷"):
        return x / y
    raise ValueError(f"unknown operator {op!r}")


def conjugate(x: ExactRoot) -> ExactRoot:
    return x.conjugate()
