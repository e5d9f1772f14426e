"""Per-n closed forms in the variable m, with plain-text rendering.

For a fixed alphabet size n the class count is a sum with one term per
cycle type.  Each term is ``class_size * prod(factor^e)`` where a factor is
either a geometric sum over an s-letter alphabet (s >= 2) or, when s == 1,
one of the linear forms ``m`` / ``m+1`` (the constant 1 of the uniform case
is dropped).  The whole sum is divided by n!.

Rendered grammar (whitespace only around ``+`` and after ``*`` of the
leading ``1/n!``)::

    expr    := "1/" INT " * (" term (" + " term)* ")"  |  term      (n == 1)
    term    := [INT "*"] factor ("*" factor)*  |  INT
    factor  := atom ["^" INT]
    atom    := "m" | "(m+1)" | "(2^(m+1)-2)" | "((p^(m+1)-p)/(p-1))"
             | "(2^(m+1)-1)" | "((p^(m+1)-1)/(p-1))" | "p^m" | "p^(em)"

:func:`evaluate_text` evaluates any string in this grammar (and the wider
arithmetic grammar it sits in) exactly, so rendered forms round-trip.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Tuple, Union

from .burnside import Variant, as_variant, count_classes, cycle_weight, divisor_weight
from .errors import ConsistencyError, DomainError
from .partitions import class_size, enumerate_partitions


@dataclass(frozen=True)
class GeomFactor:
    base: int
    exponent: int
    variant: Variant

    def value(self, m: int) -> int:
        return cycle_weight(self.base, m, self.variant) ** self.exponent

    def render(self) -> str:
        p, e = self.base, self.exponent
        if self.variant is Variant.UNIFORM:
            return f"{p}^m" if e == 1 else f"{p}^({e}m)"
        low = p if self.variant is Variant.SEMIGROUP else 1
        inner = f"{p}^(m+1)-{low}"
        atom = f"({inner})" if p == 2 else f"(({inner})/{p - 1})"
        return atom if e == 1 else f"{atom}^{e}"


@dataclass(frozen=True)
class LinearFactor:
    form: str  # "m" or "m+1"
    exponent: int

    def value(self, m: int) -> int:
        return (m if self.form == "m" else m + 1) ** self.exponent

    def render(self) -> str:
        atom = "m" if self.form == "m" else "(m+1)"
        return atom if self.exponent == 1 else f"{atom}^{self.exponent}"


Factor = Union[GeomFactor, LinearFactor]


@dataclass(frozen=True)
class Term:
    coefficient: int
    factors: Tuple[Factor, ...]

    def value(self, m: int) -> int:
        v = self.coefficient
        for f in self.factors:
            v *= f.value(m)
        return v

    def render(self) -> str:
        parts = [f.render() for f in self.factors]
        if self.coefficient == 1 and len(self.factors) == 1 and isinstance(self.factors[0], LinearFactor):
            return parts[0].strip("()") if self.factors[0].exponent == 1 else parts[0]
        if not parts:
            return str(self.coefficient)
        if self.coefficient != 1:
            parts.insert(0, str(self.coefficient))
        return "*".join(parts)


@dataclass(frozen=True)
class ClosedFormExpr:
    n: int
    variant: Variant
    denominator: int
    terms: Tuple[Term, ...]


_LINEAR = {Variant.SEMIGROUP: "m", Variant.MONOID: "m+1"}


def build_closed_form(n: int, variant="semigroup") -> ClosedFormExpr:
    """One term per partition of n, in the fixed partition order."""
    variant = as_variant(variant)
    terms = []
    for part in enumerate_partitions(n):
        bases = {}
        for k in part.parts:
            s = divisor_weight(part, k)
            bases[s] = bases.get(s, 0) + 1
        factors = []
        for s, e in sorted(bases.items()):
            if s == 1:
                if variant is not Variant.UNIFORM:
                    factors.append(LinearFactor(_LINEAR[variant], e))
            else:
                factors.append(GeomFactor(s, e, variant))
        terms.append(Term(class_size(part), tuple(factors)))
    return ClosedFormExpr(n, variant, factorial(n), tuple(terms))


def evaluate_closed_form(expr: ClosedFormExpr, m: int) -> int:
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    total = sum(t.value(m) for t in expr.terms)
    q, r = divmod(total, expr.denominator)
    if r:
        raise ConsistencyError(f"closed form for n={expr.n} at m={m} is not integral")
    return q


def render_closed_form(expr: ClosedFormExpr) -> str:
    """Deterministic plain-text form, e.g. ``1/2 * (2^(2m) + 2^m)``."""
    body = " + ".join(t.render() for t in expr.terms)
    if expr.denominator == 1 and len(expr.terms) == 1:
        return body
    return f"1/{expr.denominator} * ({body})"


# -- exact evaluation of rendered text ---------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(m)|([-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise DomainError(f"cannot parse {text[pos:]!r}")
        num, var, op = match.groups()
        out.append(("num", int(num)) if num else ("m", None) if var else (op, None))
        pos = match.end()
    return out


class _Parser:
    # expr := term (("+"|"-") term)* ; term := power (("*"|"/"|implicit) power)*
    # power := unary ("^" power)? ; unary := "-" unary | atom
    def __init__(self, tokens, m):
        self.tokens, self.i, self.m = tokens, 0, Fraction(m)

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind=None):
        if self.i >= len(self.tokens):
            raise DomainError("unexpected end of expression")
        tok = self.tokens[self.i]
        if kind and tok[0] != kind:
            raise DomainError(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.power()
        while self.peek() in ("*", "/", "num", "m", "("):
            op = self.peek()
            if op in ("*", "/"):
                self.take()
            rhs = self.power()
            value = value / rhs if op == "/" else value * rhs
        return value

    def power(self):
        base = self.unary()
        if self.peek() == "^":
            self.take()
            exp = self.power()
            if exp.denominator != 1 or exp < 0:
                raise DomainError(f"exponent must be a nonnegative integer, got {exp}")
            return base ** int(exp)
        return base

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        kind, val = self.take()
        if kind == "num":
            return Fraction(val)
        if kind == "m":
            return self.m
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise DomainError(f"unexpected token {kind!r}")


def evaluate_text(text: str, m: int) -> Fraction:
    """Evaluate an arithmetic expression in ``m`` exactly.

    Accepts integers, ``m``, ``+ - * / ^``, parentheses and implicit
    multiplication (``2m``, ``3(m+1)``).

    >>> evaluate_text("1/2 * (2^(2m) + 2^m)", 3)
    Fraction(36, 1)
    """
    parser = _Parser(_tokenize(text), m)
    value = parser.expr()
    if parser.i != len(parser.tokens):
        raise DomainError(f"trailing input in {text!r}")
    return value


def check_closed_form(n: int, variant="semigroup", max_m: int = 12) -> bool:
    """Compare the built, the rendered and the grouped evaluations for m = 1..max_m."""
    expr = build_closed_form(n, variant)
    text = render_closed_form(expr)
    return all(
        evaluate_closed_form(expr, m) == evaluate_text(text, m) == count_classes(n, m, variant)
        for m in range(1, max_m + 1)
    )
