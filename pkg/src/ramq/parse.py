"""Text grammar for rational functions.

    rational := poly ( "/" poly )?
    poly     := product | sum
    product  := factor ( "*"? factor )*        only when the poly starts with "("
    factor   := "(" sum ")" ( "^" uint )?
    sum      := ( "+" | "-" )? term ( ( "+" | "-" ) term )*
    term     := coeff ( "*"? power )? | power
    power    := "x" ( "^" uint )?
    coeff    := digits ( "." digits )? ( ("e"|"E") ("+"|"-")? digits )?

Examples: "1/(x^2+1)", "x/(x^2+1)^3", "(x+1)/(x^2+4)",
"0.5 + 2*x^2", "x/((x^2+1)^2*(x^2+4))".

A polynomial that opens with "(" is a product of parenthesized factors;
factored denominators keep their exponents as exact pole multiplicities.
Sums of parenthesized groups are not part of the grammar.
"""

from __future__ import annotations

import re

from .errors import RamqError
from .polyrat import Polynomial, RationalFunction, poly_mul, poly_pow


class ParseError(RamqError, ValueError):
    """The input does not match the rational-function grammar."""


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)|(?P<x>x)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:]!r} at {pos}")
        out.append(m.group("num") or m.group("x") or m.group("op"))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def uint(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected an integer exponent, got {tok!r}")
        return int(tok)

    def power(self) -> int:
        self.expect("x")
        if self.peek() == "^":
            self.take()
            return self.uint()
        return 1

    def term(self) -> tuple[float, int]:
        """One monomial as (coefficient, degree)."""
        tok = self.peek()
        if tok == "x":
            return 1.0, self.power()
        coeff = float(self.take())
        if self.peek() == "*":
            self.take()
            return coeff, self.power()
        if self.peek() == "x":
            return coeff, self.power()
        return coeff, 0

    def sum(self) -> Polynomial:
        coeffs: dict[int, float] = {}
        sign = 1.0
        if self.peek() in ("+", "-"):
            sign = -1.0 if self.take() == "-" else 1.0
        while True:
            c, d = self.term()
            coeffs[d] = coeffs.get(d, 0.0) + sign * c
            tok = self.peek()
            if tok not in ("+", "-"):
                break
            sign = -1.0 if self.take() == "-" else 1.0
        top = max(coeffs)
        return Polynomial(tuple(coeffs.get(k, 0.0) for k in range(top + 1)))

    def factor(self) -> list[tuple[Polynomial, int]]:
        """One parenthesized factor; a nested "((..)..(..))^k" distributes
        the outer exponent over the inner factors."""
        self.expect("(")
        if self.peek() == "(":
            inner = self.product()
            self.expect(")")
            exp = 1
            if self.peek() == "^":
                self.take()
                exp = self.uint()
            return [(base, e * exp) for base, e in inner]
        base = self.sum()
        self.expect(")")
        exp = 1
        if self.peek() == "^":
            self.take()
            exp = self.uint()
        return [(base, exp)]

    def product(self) -> list[tuple[Polynomial, int]]:
        factors = self.factor()
        while self.peek() in ("(", "*"):
            if self.peek() == "*":
                self.take()
            factors.extend(self.factor())
        return factors

    def poly(self) -> tuple[Polynomial, list[tuple[Polynomial, int]]]:
        """Returns (expanded polynomial, factor list)."""
        if self.peek() == "(":
            factors = self.product()
            expanded = Polynomial((1,))
            for base, exp in factors:
                expanded = poly_mul(expanded, poly_pow(base, exp))
            return expanded, factors
        p = self.sum()
        return p, [(p, 1)]

    def rational(self) -> RationalFunction:
        num, _ = self.poly()
        if self.peek() is None:
            raise ParseError("expected 'num / den'")
        self.expect("/")
        _, den_factors = self.poly()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.tokens[self.pos:]!r}")
        return RationalFunction.from_factors(num, den_factors)


def parse_rational(text: str) -> RationalFunction:
    """Parse 'poly / poly' per the grammar in the module docstring."""
    return _Parser(text).rational()


def parse_polynomial(text: str) -> Polynomial:
    parser = _Parser(text)
    p, _ = parser.poly()
    if parser.peek() is not None:
        raise ParseError(f"trailing input {parser.tokens[parser.pos:]!r}")
    return p
