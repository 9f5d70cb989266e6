# cohomtable/services/expressions.py

"""
PARAMETER EXPRESSIONS

Integer polynomials in named nonnegative parameters, e.g. "l*k+m+4".

Monomials are sorted tuples of (name, exponent) pairs, the empty tuple
being the constant monomial. Terms with coefficient 0 are never stored,
so structural equality is mathematical equality.

GRAMMAR:
    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := INT | NAME | "(" expr ")" | "-" factor
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping, Union

from cohomtable.services.exceptions import ExpressionSyntaxError, UnboundParameterError

Monomial = tuple[tuple[str, int], ...]

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _monomial(names: Iterable[tuple[str, int]]) -> Monomial:
    powers: Counter[str] = Counter()
    for name, exponent in names:
        powers[name] += exponent
    return tuple(sorted((n, e) for n, e in powers.items() if e))


class ParamExpr:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        collected: dict[Monomial, int] = {}
        for monomial, coefficient in (terms or {}).items():
            key = _monomial(monomial)
            collected[key] = collected.get(key, 0) + int(coefficient)
        self._terms = tuple(sorted((m, c) for m, c in collected.items() if c))

    # --------------------------------------------------
    # CONSTRUCTORS
    # --------------------------------------------------
    @classmethod
    def constant(cls, value: int) -> ParamExpr:
        return cls({(): value})

    @classmethod
    def symbol(cls, name: str) -> ParamExpr:
        return cls({((name, 1),): 1})

    @classmethod
    def coerce(cls, value: Union[ParamExpr, int, str]) -> ParamExpr:
        if isinstance(value, ParamExpr):
            return value
        if isinstance(value, bool):
            raise ExpressionSyntaxError(f"not an expression: {value!r}")
        if isinstance(value, int):
            return cls.constant(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise ExpressionSyntaxError(f"not an expression: {value!r}")

    @classmethod
    def parse(cls, text: str) -> ParamExpr:
        return _Parser(text).parse()

    # --------------------------------------------------
    # INSPECTION
    # --------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    @property
    def constant_term(self) -> int:
        return self.terms.get((), 0)

    @property
    def is_constant(self) -> bool:
        return all(m == () for m, _ in self._terms)

    @property
    def value(self) -> int:
        if not self.is_constant:
            raise UnboundParameterError(f"{self} is not constant")
        return self.constant_term

    @property
    def symbol_name(self) -> str | None:
        """The name when the expression is a single bare parameter."""
        if len(self._terms) == 1:
            monomial, coefficient = self._terms[0]
            if coefficient == 1 and len(monomial) == 1 and monomial[0][1] == 1:
                return monomial[0][0]
        return None

    def names(self) -> frozenset[str]:
        return frozenset(n for m, _ in self._terms for n, _ in m)

    def without_constant(self) -> ParamExpr:
        return ParamExpr({m: c for m, c in self._terms if m != ()})

    # --------------------------------------------------
    # ARITHMETIC
    # --------------------------------------------------
    def __add__(self, other):
        try:
            other = ParamExpr.coerce(other)
        except ExpressionSyntaxError:
            return NotImplemented
        merged = dict(self._terms)
        for m, c in other._terms:
            merged[m] = merged.get(m, 0) + c
        return ParamExpr(merged)

    __radd__ = __add__

    def __neg__(self) -> ParamExpr:
        return ParamExpr({m: -c for m, c in self._terms})

    def __sub__(self, other):
        try:
            other = ParamExpr.coerce(other)
        except ExpressionSyntaxError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ParamExpr.coerce(other) - self

    def __mul__(self, other):
        try:
            other = ParamExpr.coerce(other)
        except ExpressionSyntaxError:
            return NotImplemented
        product: dict[Monomial, int] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                key = _monomial(m1 + m2)
                product[key] = product.get(key, 0) + c1 * c2
        return ParamExpr(product)

    __rmul__ = __mul__

    # --------------------------------------------------
    # SUBSTITUTION
    # --------------------------------------------------
    def substitute(self, mapping: Mapping[str, Union[ParamExpr, int]]) -> ParamExpr:
        result = ParamExpr()
        for monomial, coefficient in self._terms:
            term = ParamExpr.constant(coefficient)
            for name, exponent in monomial:
                factor = ParamExpr.coerce(mapping[name]) if name in mapping else ParamExpr.symbol(name)
                for _ in range(exponent):
                    term = term * factor
            result = result + term
        return result

    def rename(self, mapping: Mapping[str, str]) -> ParamExpr:
        return self.substitute({old: ParamExpr.symbol(new) for old, new in mapping.items()})

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        missing = sorted(self.names() - set(assignment))
        if missing:
            raise UnboundParameterError(f"no value for {', '.join(missing)} in {self}")
        return self.substitute({n: int(assignment[n]) for n in self.names()}).value

    # --------------------------------------------------
    # DUNDER
    # --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = ParamExpr.constant(other)
        if not isinstance(other, ParamExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"ParamExpr({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(
            self._terms,
            key=lambda mc: (-sum(e for _, e in mc[0]), mc[0]),
        )
        pieces: list[str] = []
        for monomial, coefficient in ordered:
            factors = [n if e == 1 else "*".join([n] * e) for n, e in monomial]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            sign = "-" if coefficient < 0 else "+"
            pieces.append(body if not pieces and sign == "+" else f"{sign}{body}")
        return "".join(pieces)


class _Parser:
    def __init__(self, text: str):
        self.text = text or ""
        self.tokens = self._tokenize(self.text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str]]:
        tokens = []
        for number, name, other in _TOKEN_RE.findall(text):
            if number:
                tokens.append(("int", number))
            elif name:
                tokens.append(("name", name))
            elif other.strip():
                if other not in "+-*()":
                    raise ExpressionSyntaxError(f"unexpected {other!r} in {text!r}")
                tokens.append(("op", other))
        if not tokens:
            raise ExpressionSyntaxError("empty expression")
        return tokens

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            raise ExpressionSyntaxError(f"unexpected end of {self.text!r}")
        self.pos += 1
        return token

    def parse(self) -> ParamExpr:
        result = self._expr()
        if self._peek() is not None:
            raise ExpressionSyntaxError(f"trailing input in {self.text!r}")
        return result

    def _expr(self) -> ParamExpr:
        sign = 1
        if self._peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self._take()[1] == "-" else 1
        result = sign * self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> ParamExpr:
        result = self._factor()
        while self._peek() == ("op", "*"):
            self._take()
            result = result * self._factor()
        return result

    def _factor(self) -> ParamExpr:
        kind, text = self._take()
        if kind == "int":
            return ParamExpr.constant(int(text))
        if kind == "name":
            return ParamExpr.symbol(text)
        if text == "-":
            return -self._factor()
        if text == "(":
            inner = self._expr()
            if self._take() != ("op", ")"):
                raise ExpressionSyntaxError(f"unbalanced parentheses in {self.text!r}")
            return inner
        raise ExpressionSyntaxError(f"unexpected {text!r} in {self.text!r}")
