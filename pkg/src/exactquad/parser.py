"""Recursive-descent front end for quadratic expressions.

Accepted inputs::

    x^2 - 2x - 2              -> GeneralForm
    3/2·x² + 0.25 = x         -> GeneralForm (right side moved over)
    x^2 + 4 (mod 7)           -> CongruenceProblem
    prodsum alpha=6 beta=5    -> ProdSum

Coefficients are exact: ``0.25`` reads as ``1/4``. Multiplication may be
implicit (``2x``) or written with ``*`` / ``·``; ``²`` and ``−`` are accepted
alongside ``^2`` and ``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .forms import DegenerateQuadraticError, GeneralForm
from .modular import CongruenceProblem


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: str | None = None) -> None:
        self.offset = offset
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at byte {offset}{hint}")


class NonIntegerModError(ValueError):
    """Congruence coefficients must be integers."""


@dataclass(frozen=True)
class ProdSum:
    alpha: Fraction
    beta: Fraction


ParsedInput = Union[GeneralForm, CongruenceProblem, ProdSum]


class Token(NamedTuple):
    kind: str
    text: str
    pos: int  # character index


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?|\.\d+)
  | (?P<word>[A-Za-z_]+)
  | (?P<sup2>²)
  | (?P<op>[-−+*·/^()=≡])
    """,
    re.VERBOSE,
)

_OP_KIND = {"-": "-", "−": "-", "+": "+", "*": "*", "·": "*", "/": "/", "^": "^",
            "(": "(", ")": ")", "=": "=", "≡": "="}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos),
                             "a number, x, an operator or '(mod n)'")
        kind = m.lastgroup
        assert kind is not None
        if kind == "op":
            tokens.append(Token(_OP_KIND[m.group()], m.group(), pos))
        elif kind == "word":
            word = m.group().lower()
            tokens.append(Token("x" if word == "x" else word if word in ("mod", "prodsum") else "name",
                                m.group(), pos))
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _number(text: str) -> Fraction:
    # Fraction("1.25") is exact; a trailing dot ("2.") is not accepted by it
    return Fraction(text.rstrip(".") if text.endswith(".") else text)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[min(self.i, len(self.tokens) - 1)]

    def error(self, message: str, expected: str | None = None, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, _byte_offset(self.text, tok.pos), expected)

    def accept(self, *kinds: str) -> Token | None:
        if self.tok.kind in kinds:
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, kind: str, what: str) -> Token:
        t = self.accept(kind)
        if t is None:
            found = self.tok.text or "end of input"
            raise self.error(f"unexpected {found!r}", what)
        return t

    # -- grammar ----------------------------------------------------------

    def parse(self) -> ParsedInput:
        if self.accept("prodsum"):
            return self.prodsum()
        coeffs = self.polynomial()
        if self.accept("="):
            rhs = self.polynomial()
            coeffs = [l - r for l, r in zip(coeffs, rhs)]
        modulus = self.modulus()
        self.expect("eof", "end of input")
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        if modulus is None:
            if a == 0:
                raise DegenerateQuadraticError("x^2 coefficient is zero")
            return GeneralForm(a, b, c)
        if any(v.denominator != 1 for v in (a, b, c)):
            raise NonIntegerModError("congruence coefficients must be integers")
        pr = CongruenceProblem.reduced(int(a), int(b), int(c), modulus)
        if pr.a == 0:
            raise DegenerateQuadraticError(f"x^2 coefficient is 0 mod {modulus}")
        return pr

    def prodsum(self) -> ProdSum:
        values: dict[str, Fraction] = {}
        while self.tok.kind == "name":
            name_tok = self.expect("name", "alpha or beta")
            name = name_tok.text.lower()
            if name not in ("alpha", "beta") or name in values:
                raise self.error(f"unexpected parameter {name_tok.text!r}", "alpha= or beta=", name_tok)
            self.expect("=", "'='")
            values[name] = self.signed_coef()
        self.expect("eof", "alpha=<rational> beta=<rational>")
        missing = [k for k in ("alpha", "beta") if k not in values]
        if missing:
            raise self.error(f"missing {' and '.join(missing)}", "alpha=<rational> beta=<rational>")
        return ProdSum(values["alpha"], values["beta"])

    def modulus(self) -> int | None:
        paren = self.tok.kind == "(" and self.tokens[self.i + 1].kind == "mod"
        if paren:
            self.i += 1
        if not self.accept("mod"):
            return None
        t = self.expect("num", "an integer modulus")
        if not t.text.isdigit():
            raise self.error("modulus must be an integer", "an integer modulus", t)
        if paren:
            self.expect(")", "')'")
        n = int(t.text)
        if n < 2:
            raise self.error("modulus must be at least 2", "an integer modulus >= 2", t)
        return n

    def polynomial(self) -> list[Fraction]:
        coeffs = [Fraction(0)] * 3
        sign = self.sign()
        while True:
            power, coef = self.term()
            coeffs[power] += sign * coef
            if self.tok.kind not in ("+", "-"):
                return coeffs
            sign = self.sign()

    def sign(self) -> int:
        s = 1
        while self.tok.kind in ("+", "-"):
            if self.accept("-"):
                s = -s
            else:
                self.accept("+")
        return s

    def term(self) -> tuple[int, Fraction]:
        coef: Fraction | None = None
        if self.tok.kind == "num" or (self.tok.kind == "(" and self.tokens[self.i + 1].kind != "mod"):
            coef = self.coef()
            self.accept("*")
        if self.tok.kind == "x":
            return self.xpower(), Fraction(1) if coef is None else coef
        if coef is None:
            raise self.error(f"unexpected {self.tok.text or 'end of input'!r}", "a number or x")
        return 0, coef

    def coef(self) -> Fraction:
        if self.accept("("):
            value = self.signed_coef()
            self.expect(")", "')'")
            return value
        t = self.expect("num", "a number")
        value = _number(t.text)
        if self.accept("/"):
            d = self.expect("num", "a denominator")
            den = _number(d.text)
            if den == 0:
                raise self.error("zero denominator", "a nonzero denominator", d)
            value /= den
        return value

    def signed_coef(self) -> Fraction:
        return self.sign() * self.coef()

    def xpower(self) -> int:
        self.expect("x", "x")
        if self.accept("sup2"):
            return 2
        if self.accept("^"):
            t = self.expect("num", "an exponent")
            if t.text not in ("0", "1", "2"):
                raise self.error(f"exponent {t.text} not supported", "exponent 0, 1 or 2", t)
            return int(t.text)
        return 1


def parse(text: str) -> ParsedInput:
    """Parse a quadratic, congruence or product/sum request."""
    return _Parser(text).parse()


def parse_general(text: str) -> GeneralForm:
    result = parse(text)
    if not isinstance(result, GeneralForm):
        raise ParseError("expected a quadratic over Q", 0, "a quadratic expression without (mod n)")
    return result


def parse_congruence(text: str) -> CongruenceProblem:
    result = parse(text)
    if not isinstance(result, CongruenceProblem):
        raise ParseError("expected a congruence", len(text.encode("utf-8")), "'(mod n)'")
    return result
