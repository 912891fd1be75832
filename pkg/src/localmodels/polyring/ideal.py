"""Ideals with cached Groebner bases and the queries built on them."""
from __future__ import annotations

import math
import threading
from itertools import product
from typing import Iterable

from ..config import DEFAULT_BUDGET, Budget
from ..errors import ContextMismatch
from .groebner import buchberger, reduce_polynomial
from .ring import PolyRing, Polynomial

INFINITE = math.inf


class Ideal:
    """An ideal given by generators; Groebner bases are cached per monomial order."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = (), tags: Iterable[str] | None = None):
        self.ring = ring
        generators = list(generators)
        tag_list = list(tags) if tags is not None else [None] * len(generators)
        if len(tag_list) != len(generators):
            raise ValueError("tags must align with generators")
        gens = []
        kept_tags = []
        seen = set()
        for g, tag in zip(generators, tag_list):
            if not isinstance(g, Polynomial):
                g = ring(g)
            if not ring.compatible(g.ring):
                raise ContextMismatch(f"generator {g} is not in {ring.variables}/{ring.field}")
            g = g.change_ring(ring)
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
            kept_tags.append(tag)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        # provenance label per generator (duplicates and zeros pruned, first label kept)
        self.tags: tuple = tuple(kept_tags)
        self._gb: dict[str, tuple[Polynomial, ...]] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring.field}[{', '.join(self.ring.variables)}])"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def _check(self, other: "Ideal"):
        if not self.ring.compatible(other.ring):
            raise ContextMismatch("ideals live in different rings")

    def groebner_basis(self, order: str | None = None, budget: Budget = DEFAULT_BUDGET) -> tuple[Polynomial, ...]:
        order = order or self.ring.order
        with self._lock:
            if order not in self._gb:
                ring = self.ring.with_order(order)
                self._gb[order] = tuple(buchberger(ring, list(self.generators), budget))
            return self._gb[order]

    def normal_form(self, f: Polynomial, budget: Budget = DEFAULT_BUDGET) -> Polynomial:
        if not self.ring.compatible(f.ring):
            raise ContextMismatch("polynomial and ideal live in different rings")
        gb = self.groebner_basis(budget=budget)
        return reduce_polynomial(f.change_ring(self.ring), list(gb), budget)

    def contains_polynomial(self, f: Polynomial, budget: Budget = DEFAULT_BUDGET) -> bool:
        return self.normal_form(f, budget).is_zero()

    def __contains__(self, f):
        return self.contains_polynomial(f)

    def contains(self, other: "Ideal", budget: Budget = DEFAULT_BUDGET) -> bool:
        self._check(other)
        return all(self.contains_polynomial(g, budget) for g in other.generators)

    def equals(self, other: "Ideal", budget: Budget = DEFAULT_BUDGET) -> bool:
        return self.contains(other, budget) and other.contains(self, budget)

    def leading_monomials(self, order: str | None = None, budget: Budget = DEFAULT_BUDGET) -> list[tuple]:
        return [g.leading_monomial() for g in self.groebner_basis(order, budget)]

    def is_unit(self, budget: Budget = DEFAULT_BUDGET) -> bool:
        gb = self.groebner_basis(budget=budget)
        return len(gb) == 1 and gb[0].is_constant()

    def standard_monomials(self, budget: Budget = DEFAULT_BUDGET) -> list[tuple] | None:
        """Monomials outside the leading-term ideal, or None if there are infinitely many."""
        lms = self.leading_monomials(budget=budget)
        n = self.ring.nvars
        if any(not any(m) for m in lms):
            return []
        bounds = []
        for i in range(n):
            pure = [m[i] for m in lms if m[i] and all(m[j] == 0 for j in range(n) if j != i)]
            if not pure:
                return None
            bounds.append(min(pure))
        out = [
            m for m in product(*(range(b) for b in bounds))
            if not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)
        ]
        return sorted(out, key=self.ring.key)

    def quotient_dimension(self, budget: Budget = DEFAULT_BUDGET):
        """``dim_k k[x]/I`` as an int, or ``INFINITE``."""
        std = self.standard_monomials(budget)
        return INFINITE if std is None else len(std)

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, list(self.generators) + list(extra))

    def change_field(self, field) -> "Ideal":
        ring = PolyRing(self.ring.variables, field, self.ring.order)
        return Ideal(ring, [Polynomial(ring, g.terms) for g in self.generators], self.tags)


# functional aliases ------------------------------------------------------------

def groebner_basis(ideal: Ideal, order: str | None = None, budget: Budget = DEFAULT_BUDGET):
    return ideal.groebner_basis(order, budget)


def normal_form(f: Polynomial, ideal: Ideal, budget: Budget = DEFAULT_BUDGET) -> Polynomial:
    return ideal.normal_form(f, budget)


def ideal_member(f: Polynomial, ideal: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    return ideal.contains_polynomial(f, budget)


def ideal_contains(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    return I.contains(J, budget)


def ideal_equal(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    return I.equals(J, budget)


def quotient_dimension(ideal: Ideal, budget: Budget = DEFAULT_BUDGET):
    return ideal.quotient_dimension(budget)


def substitute(f: Polynomial, assignment, target: PolyRing | None = None) -> Polynomial:
    return f.substitute(assignment, target)
