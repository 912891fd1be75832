"""Sparse multivariate polynomials over an exact field."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from ..errors import ContextMismatch
from .field import QQ, Field

Monomial = tuple  # exponent vector


def _lex_key(m):
    return m


def _grlex_key(m):
    return (sum(m), m)


def _grevlex_key(m):
    return (sum(m), tuple(-x for x in reversed(m)))


ORDERS: dict[str, Callable] = {
    "lex": _lex_key,
    "grlex": _grlex_key,
    "grevlex": _grevlex_key,
}


@dataclass(frozen=True)
class PolyRing:
    """Variables, coefficient field and monomial order.

    Two rings are *compatible* when variables and field agree; the order is a
    computational choice and never blocks arithmetic.
    """

    variables: tuple[str, ...]
    field: Field = QQ
    order: str = "grevlex"
    key: Callable = dc_field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")
        object.__setattr__(self, "key", ORDERS[self.order])

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def compatible(self, other: "PolyRing") -> bool:
        return self.variables == other.variables and self.field == other.field

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name_or_index) -> "Polynomial":
        i = self.variables.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x.change_ring(self)
        if isinstance(x, str):
            from .textio import parse_polynomial
            return parse_polynomial(x, self)
        return self.constant(x)


class Polynomial:
    """Immutable sparse polynomial: a map monomial -> nonzero coefficient."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping | None = None, _clean=False):
        self.ring = ring
        if terms is None:
            terms = {}
        if _clean:
            self._terms = terms
        else:
            F = ring.field
            out = {}
            for m, c in terms.items():
                c = F(c)
                if c:
                    out[tuple(m)] = c
            self._terms = out
        self._hash = None

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return self._terms

    def sorted_terms(self) -> list:
        """``(monomial, coeff)`` pairs, largest monomial first."""
        key = self.ring.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def leading_monomial(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=self.ring.key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self * self.ring.field.inv(self.leading_coefficient())

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        if ring.variables != self.ring.variables:
            raise ContextMismatch(f"cannot move polynomial from {self.ring.variables} to {ring.variables}")
        if ring.field == self.ring.field:
            return Polynomial(ring, self._terms, _clean=True)
        return Polynomial(ring, self._terms)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self.ring.compatible(other.ring):
                raise ContextMismatch(
                    f"rings differ: {self.ring.variables}/{self.ring.field} vs "
                    f"{other.ring.variables}/{other.ring.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def _normalize(self, c):
        p = self.ring.field.characteristic
        return c % p if p else c

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        norm = self._normalize
        for m, c in other._terms.items():
            v = norm(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        norm = self._normalize
        return Polynomial(self.ring, {m: norm(-c) for m, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero()
            norm = self._normalize
            return Polynomial(self.ring, {m: norm(v * c) for m, v in self._terms.items()}, _clean=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        p = self.ring.field.characteristic
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, mono, coeff) -> "Polynomial":
        norm = self._normalize
        out = {}
        for m, c in self._terms.items():
            v = norm(c * coeff)
            if v:
                out[tuple(a + b for a, b in zip(m, mono))] = v
        return Polynomial(self.ring, out, _clean=True)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.compatible(other.ring) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, self.ring.field, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation ----------------------------------------------------------

    def substitute(self, assignment: Mapping, target: PolyRing | None = None) -> "Polynomial":
        """Simultaneously replace variables by polynomials (or scalars).

        ``assignment`` maps variable names (or indices) to Polynomials in
        ``target`` (default: this ring) or to scalars. Unassigned variables
        are kept, which requires their names to exist in ``target``.
        """
        target = target or self.ring
        idx = {}
        for k, v in assignment.items():
            i = self.ring.variables.index(k) if isinstance(k, str) else int(k)
            if isinstance(v, Polynomial):
                if not target.compatible(v.ring):
                    raise ContextMismatch(f"substitution value lives in {v.ring.variables}, not {target.variables}")
            else:
                v = target.constant(v)
            idx[i] = v
        images = []
        for i, name in enumerate(self.ring.variables):
            if i in idx:
                images.append(idx[i])
            elif name in target.variables:
                images.append(target.var(name))
            else:
                raise ContextMismatch(f"variable {name} has no image in {target.variables}")
        convert = target.field
        powers: dict = {}
        result = target.zero()
        for m, c in self._terms.items():
            term = target.constant(convert(c))
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
                    if not term:
                        break
            result = result + term
        return result

    def evaluate(self, point) -> object:
        """Evaluate at a tuple of field elements."""
        F = self.ring.field
        total = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x ** e
            total += v
        return F(total)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        from .textio import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def polynomial_ring(names: Iterable[str] | str, field: Field = QQ, order: str = "grevlex") -> PolyRing:
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return PolyRing(tuple(names), field, order)
