"""Buchberger's algorithm with the Gebauer-Moeller criteria.

Internally a polynomial is a dict ``exponent tuple -> coefficient``. Over
GF(p) coefficients are ints in ``[0, p)`` and basis elements are kept monic.
Over QQ the computation is fraction free: every basis element is a
primitive integer polynomial with positive leading coefficient, and
reductions cross-multiply instead of dividing. Only the final reduced
basis is converted back to monic rational polynomials.

Pair selection is the normal strategy: smallest total degree of the lcm
first, ties broken lexicographically on the lcm exponent vector, then by
insertion order. Given identical input the output is identical.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..config import DEFAULT_BUDGET, Budget
from ..errors import ResourceLimit
from .ring import PolyRing, Polynomial


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Arith:
    """Coefficient arithmetic specialised to the ring's field."""

    def __init__(self, ring: PolyRing, budget: Budget):
        self.ring = ring
        self.key = ring.key
        self.p = ring.field.characteristic
        self.max_terms = budget.max_terms

    # -- import / export -----------------------------------------------------

    def from_poly(self, f: Polynomial) -> dict:
        if self.p:
            return dict(f.terms)
        den = 1
        for c in f.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        return {m: int(c * den) for m, c in f.terms.items()}

    def to_poly(self, f: dict) -> Polynomial:
        if self.p:
            return Polynomial(self.ring, f, _clean=True)
        lm = max(f, key=self.key)
        lc = f[lm]
        return Polynomial(self.ring, {m: Fraction(c, lc) for m, c in f.items()}, _clean=True)

    def normalize(self, f: dict) -> dict:
        lm = max(f, key=self.key)
        lc = f[lm]
        if self.p:
            if lc == 1:
                return f
            inv = pow(lc, -1, self.p)
            return {m: c * inv % self.p for m, c in f.items()}
        g = 0
        for c in f.values():
            g = gcd(g, c)
            if g == 1:
                break
        if lc < 0:
            g = -g
        if g == 1:
            return f
        return {m: c // g for m, c in f.items()}

    # -- core operations -------------------------------------------------------

    def spoly(self, f: dict, flm, g: dict, glm) -> dict:
        L = _lcm(flm, glm)
        uf, ug = _sub(L, flm), _sub(L, glm)
        if self.p:
            p = self.p
            out = {tuple(a + b for a, b in zip(m, uf)): c for m, c in f.items()}
            for m, c in g.items():
                k = tuple(a + b for a, b in zip(m, ug))
                v = (out.get(k, 0) - c) % p
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
            return out
        a, b = f[flm], g[glm]
        d = gcd(a, b)
        a, b = a // d, b // d
        out = {tuple(x + y for x, y in zip(m, uf)): c * b for m, c in f.items()}
        for m, c in g.items():
            k = tuple(x + y for x, y in zip(m, ug))
            v = out.get(k, 0) - c * a
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def reduce(self, f: dict, basis: list, tail=True):
        """Reduce ``f`` by ``basis`` (a list of ``(lm, dict)``).

        Returns ``(remainder, scale)`` where ``remainder = scale * NF(f)``;
        ``scale`` is 1 over GF(p) and a nonzero rational over QQ.
        """
        key = self.key
        f = dict(f)
        r: dict = {}
        scale = Fraction(1)
        p = self.p
        steps = 0
        while f:
            m = max(f, key=key)
            c = f.pop(m)
            for glm, g in basis:
                if _divides(glm, m):
                    q = _sub(m, glm)
                    if p:
                        # g is monic
                        for gm, gc in g.items():
                            if gm is glm or gm == glm:
                                continue
                            k = tuple(a + b for a, b in zip(gm, q))
                            v = (f.get(k, 0) - c * gc) % p
                            if v:
                                f[k] = v
                            else:
                                f.pop(k, None)
                    else:
                        a = g[glm]
                        d = gcd(a, c)
                        a1, c1 = a // d, c // d
                        if a1 < 0:
                            a1, c1 = -a1, -c1
                        if a1 != 1:
                            for k in f:
                                f[k] *= a1
                            for k in r:
                                r[k] *= a1
                            scale *= a1
                        for gm, gc in g.items():
                            if gm == glm:
                                continue
                            k = tuple(x + y for x, y in zip(gm, q))
                            v = f.get(k, 0) - c1 * gc
                            if v:
                                f[k] = v
                            else:
                                f.pop(k, None)
                        steps += 1
                        if steps % 16 == 0:
                            scale = self._shrink(f, r, scale)
                    if len(f) > self.max_terms:
                        raise ResourceLimit(
                            f"intermediate polynomial exceeded {self.max_terms} terms",
                            budget="max_terms", used=len(f),
                        )
                    break
            else:
                if not tail:
                    r[m] = c
                    r.update(f)
                    f = {}
                    break
                r[m] = c
        if not p and r:
            scale = self._shrink({}, r, scale)
        return r, scale

    @staticmethod
    def _shrink(f: dict, r: dict, scale: Fraction) -> Fraction:
        g = 0
        for c in f.values():
            g = gcd(g, c)
            if g == 1:
                return scale
        for c in r.values():
            g = gcd(g, c)
            if g == 1:
                return scale
        if g > 1:
            for k in f:
                f[k] //= g
            for k in r:
                r[k] //= g
            scale = scale / g
        return scale


def buchberger(ring: PolyRing, polys: list[Polynomial], budget: Budget = DEFAULT_BUDGET, stats=None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``polys`` in ``ring``'s order."""
    ar = _Arith(ring, budget)
    key = ring.key
    polys = [ar.normalize(ar.from_poly(f.change_ring(ring))) for f in polys if not f.is_zero()]
    if not polys:
        return []
    # deterministic input order: by leading monomial, smallest first
    polys.sort(key=lambda f: (key(max(f, key=key)), len(f)))

    G: list[dict] = []       # all basis polynomials ever added
    LM: list = []            # their leading monomials
    active: list[int] = []   # indices of the current (not superseded) basis
    pairs: list[tuple] = []  # (sort key, i, j, lcm)
    processed = 0

    def current_basis():
        return [(LM[i], G[i]) for i in active]

    def update(h_idx: int):
        nonlocal pairs, active
        hlm = LM[h_idx]
        # Gebauer-Moeller: new pairs
        C = [(g, _lcm(hlm, LM[g])) for g in active]
        D = []
        while C:
            g1, L1 = C.pop(0)
            if _coprime(hlm, LM[g1]) or (
                not any(_divides(L2, L1) for _, L2 in C)
                and not any(_divides(L2, L1) for _, L2 in D)
            ):
                D.append((g1, L1))
        keep = D
        new_pairs = [(g, L) for g, L in keep if not _coprime(hlm, LM[g])]
        # old pairs (i, j) eliminated by h
        survivors = []
        for item in pairs:
            _, i, j, L = item
            if _divides(hlm, L) and _lcm(LM[i], hlm) != L and _lcm(LM[j], hlm) != L:
                continue
            survivors.append(item)
        for g, L in new_pairs:
            survivors.append(((sum(L), L, g, h_idx), g, h_idx, L))
        pairs = survivors
        active = [g for g in active if not _divides(hlm, LM[g])] + [h_idx]

    for f in polys:
        # reduce input against the basis so far to keep the start small
        r, _ = ar.reduce(f, current_basis()) if active else (f, 1)
        if r:
            r = ar.normalize(r)
            G.append(r)
            LM.append(max(r, key=key))
            update(len(G) - 1)

    while pairs:
        pairs.sort(key=lambda t: t[0])
        _, i, j, L = pairs.pop(0)
        processed += 1
        if processed > budget.max_pairs:
            raise ResourceLimit(
                f"Groebner basis exceeded {budget.max_pairs} S-pairs",
                budget="max_pairs", used=processed,
            )
        s = ar.spoly(G[i], LM[i], G[j], LM[j])
        if not s:
            continue
        r, _ = ar.reduce(s, current_basis())
        if r:
            r = ar.normalize(r)
            G.append(r)
            LM.append(max(r, key=key))
            update(len(G) - 1)

    if stats is not None:
        stats["pairs"] = processed
        stats["basis_size_before_reduction"] = len(active)

    # minimal basis, then interreduce
    basis = [(LM[i], G[i]) for i in active]
    basis = [
        (lm, g) for k, (lm, g) in enumerate(basis)
        if not any(_divides(lm2, lm) and (lm2 != lm or k2 < k) for k2, (lm2, _) in enumerate(basis) if k2 != k)
    ]
    reduced = []
    for k, (lm, g) in enumerate(basis):
        others = [b for k2, b in enumerate(basis) if k2 != k]
        r, _ = ar.reduce(g, others)
        r = ar.normalize(r)
        reduced.append(ar.to_poly(r))
    reduced.sort(key=lambda f: key(f.leading_monomial()))
    return reduced


def reduce_polynomial(f: Polynomial, basis: list[Polynomial], budget: Budget = DEFAULT_BUDGET) -> Polynomial:
    """Full reduction of ``f`` modulo a Groebner basis, returned exactly (not rescaled)."""
    ring = basis[0].ring if basis else f.ring
    ar = _Arith(ring, budget)
    f = f.change_ring(ring)
    if f.is_zero() or not basis:
        return f
    B = [(g.leading_monomial(), ar.from_poly(g)) for g in basis]
    if ring.field.characteristic:
        r, _ = ar.reduce(dict(f.terms), B)
        return Polynomial(ring, r, _clean=True)
    # exact rational remainder: clear denominators, reduce, undo scaling
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    fi = {m: int(c * den) for m, c in f.terms.items()}
    r, scale = ar.reduce(fi, B)
    factor = 1 / (scale * den)
    return Polynomial(ring, {m: c * factor for m, c in r.items()})
