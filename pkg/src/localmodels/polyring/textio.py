"""Text and JSON forms of polynomials and ideals.

Text form: ``3*a11^2*a12 - 1/2*a21``. Terms are printed largest first in
the ring's monomial order; ``parse_polynomial(format_polynomial(f))``
returns ``f``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .field import Field
from .ring import PolyRing, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    names = f.ring.variables
    pieces = []
    for m, c in f.sorted_terms():
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if not mt or mt.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            num, name, op = mt.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = mt.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}, got {val!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        result = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input at token {self.peek()[1]!r}")
        return result

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                if val == "*":
                    acc = acc * rhs
                else:
                    if not rhs.is_constant() or rhs.is_zero():
                        raise ValueError("division only by nonzero constants")
                    acc = acc * self.ring.field.inv(rhs.terms[(0,) * self.ring.nvars])
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k2, exp = self.take()
            if k2 != "num":
                raise ValueError("exponent must be a nonnegative integer literal")
            return base ** exp
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.constant(val)
        if kind == "var":
            if val not in self.ring.variables:
                raise ValueError(f"unknown variable {val!r}; ring has {self.ring.variables}")
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "op" and val == "-":
            return -self.power()
        raise ValueError(f"unexpected token {val!r}")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring).parse()


def ideal_to_dict(ideal, tags=None) -> dict:
    ring = ideal.ring
    out = {
        "field": ring.field.name,
        "order": ring.order,
        "variables": list(ring.variables),
        "generators": [format_polynomial(g) for g in ideal.generators],
    }
    if tags is not None:
        out["provenance"] = list(tags)
    return out


def ideal_from_dict(data: dict):
    from .ideal import Ideal

    ring = PolyRing(tuple(data["variables"]), Field.parse(data["field"]), data.get("order", "grevlex"))
    return Ideal(ring, [parse_polynomial(g, ring) for g in data["generators"]])


def ideal_to_json(ideal, tags=None, **kw) -> str:
    return json.dumps(ideal_to_dict(ideal, tags), **kw)


def ideal_from_json(text: str):
    return ideal_from_dict(json.loads(text))


def parse_coefficient(text: str) -> Fraction:
    return Fraction(text)
