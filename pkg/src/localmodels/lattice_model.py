"""Pi-stable subspaces of ``k[Pi]/Pi^{e_1} + ... + k[Pi]/Pi^{e_d}`` over GF(p).

Basis convention: block ``i`` contributes ``v_i, Pi v_i, ..., Pi^{e_i-1} v_i``
in that order, so ``Pi`` sends each basis vector to the next one of its
block and the last one to zero. A subspace is stored by the rows of its
reduced row echelon basis; transposed, this is the column-reduced echelon
``D x r`` matrix, and two subspaces are equal iff their forms are equal.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import linalg
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, RangeError
from .orbits import FqMatrix, is_nilpotent, jordan_type_of
from .partitions import Partition, dominance_leq
from .polyring.field import Field


@dataclass(frozen=True)
class PiModule:
    exponents: tuple[int, ...]
    field: Field

    def __init__(self, exponents, field: Field):
        exponents = tuple(int(x) for x in exponents)
        if not exponents or any(x < 1 for x in exponents):
            raise RangeError(f"summand exponents must be >= 1, got {exponents}")
        if field.is_rational:
            raise ValueError("PiModule needs a finite field")
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "field", field)

    @classmethod
    def homogeneous(cls, e: int, d: int, field: Field) -> "PiModule":
        return cls((e,) * d, field)

    @property
    def dim(self) -> int:
        return sum(self.exponents)

    @property
    def is_homogeneous(self) -> bool:
        return len(set(self.exponents)) == 1

    def pi_matrix(self) -> list[list[int]]:
        """Matrix of Pi acting on column vectors."""
        D = self.dim
        M = [[0] * D for _ in range(D)]
        start = 0
        for ex in self.exponents:
            for j in range(start, start + ex - 1):
                M[j + 1][j] = 1
            start += ex
        return M

    def apply_pi(self, v):
        out = [0] * self.dim
        start = 0
        for ex in self.exponents:
            for j in range(start, start + ex - 1):
                out[j + 1] = v[j]
            start += ex
        return out


@dataclass(frozen=True)
class LatticePoint:
    module: PiModule
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> list[list[int]]:
        """The ``D x r`` column-reduced echelon form."""
        return linalg.transpose(self.basis) if self.basis else [[] for _ in range(self.module.dim)]

    def restriction(self) -> FqMatrix:
        """Matrix of Pi restricted to the subspace, in the echelon basis (acting on columns)."""
        F = self.module.field
        cols = [[self.module.apply_pi(b)[c] for c in self.pivots] for b in self.basis]
        return FqMatrix(linalg.transpose(cols) if cols else [], F)


def canonical(module: PiModule, rows) -> LatticePoint:
    R, piv = linalg.rref([list(r) for r in rows], module.field)
    return LatticePoint(module, tuple(tuple(r) for r in R), tuple(piv))


def is_pi_stable(module: PiModule, basis, pivots) -> bool:
    return all(linalg.in_span(basis, pivots, module.apply_pi(b), module.field) for b in basis)


def _check_budget(module: PiModule, r: int, budget: Budget):
    estimate = linalg.gaussian_binomial(module.dim, r, module.field.characteristic)
    if estimate > budget.max_subspaces:
        raise BudgetExceeded(
            f"{estimate} subspaces exceed max_subspaces={budget.max_subspaces}",
            budget="max_subspaces", estimate=estimate,
        )


def enumerate_points_filter(module: PiModule, r: int, budget: Budget = DEFAULT_BUDGET) -> list[LatticePoint]:
    """Scan every r-dimensional subspace and keep the Pi-stable ones."""
    if not 0 <= r <= module.dim:
        raise RangeError(f"r={r} outside 0..{module.dim}")
    _check_budget(module, r, budget)
    out = []
    for rows in linalg.echelon_subspaces(module.dim, r, module.field):
        R, piv = linalg.rref(rows, module.field)
        if is_pi_stable(module, R, piv):
            out.append(LatticePoint(module, tuple(tuple(x) for x in R), tuple(piv)))
    return sorted(out, key=lambda P: P.basis)


def enumerate_points(module: PiModule, r: int, budget: Budget = DEFAULT_BUDGET) -> list[LatticePoint]:
    """All Pi-stable r-dimensional subspaces, grown one dimension at a time.

    Every Pi-stable F of dimension j+1 contains a Pi-stable hyperplane (one
    containing Pi F), so F = G + <v> with G Pi-stable of dimension j and v a
    vector of Pi^{-1}(G) outside G. Lines of Pi^{-1}(G)/G are enumerated and
    the results deduplicated by canonical form.
    """
    if not 0 <= r <= module.dim:
        raise RangeError(f"r={r} outside 0..{module.dim}")
    F = module.field
    D = module.dim
    empty = canonical(module, [])
    layer = {empty.basis: empty}
    visited = 0
    for _ in range(r):
        nxt = {}
        for G in layer.values():
            basis, piv = [list(b) for b in G.basis], list(G.pivots)
            free = [c for c in range(D) if c not in piv]
            # Pi^{-1}(G) is the kernel of x -> (Pi x mod G), read off at non-pivot columns
            images = []
            for col in range(D):
                unit = [0] * D
                unit[col] = 1
                w = module.apply_pi(unit)
                for row, pc in zip(basis, piv):
                    if w[pc]:
                        f = w[pc]
                        w = [F(x - f * y) for x, y in zip(w, row)]
                images.append([w[c] for c in free])
            pre = linalg.kernel(linalg.transpose(images), F) if free else []
            complement = []
            span, span_piv = basis, piv
            for v in pre:
                if not linalg.in_span(span, span_piv, v, F):
                    complement.append(v)
                    span, span_piv = linalg.rref(span + [v], F)
            if not complement:
                continue
            for coeffs in linalg.projective_points(len(complement), F):
                v = [F(sum(c * row[i] for c, row in zip(coeffs, complement))) for i in range(D)]
                visited += 1
                if visited > budget.max_subspaces:
                    raise BudgetExceeded(
                        f"visited more than max_subspaces={budget.max_subspaces} subspaces",
                        budget="max_subspaces", estimate=visited,
                    )
                P = canonical(module, basis + [v])
                nxt.setdefault(P.basis, P)
        layer = nxt
    points = sorted(layer.values(), key=lambda P: P.basis)
    # Pi is nilpotent, so det(T - Pi|F) = T^r holds on every point
    assert all(is_nilpotent(P.restriction()) for P in points if P.rank)
    return points


def stratum_of(point: LatticePoint) -> Partition:
    """Jordan type of Pi restricted to the subspace."""
    if point.rank == 0:
        return Partition()
    A = point.restriction()
    return jordan_type_of(A)


def phi_image_type(point: LatticePoint) -> tuple[Partition, FqMatrix]:
    """The matrix of Pi|F in the echelon basis together with its Jordan type."""
    if point.rank == 0:
        return Partition(), FqMatrix([], point.module.field)
    A = point.restriction()
    return jordan_type_of(A), A


def stratify(module: PiModule, r: int, budget: Budget = DEFAULT_BUDGET) -> dict[Partition, int]:
    """Number of points per Jordan type, listed by decreasing partition."""
    counts = Counter(stratum_of(P) for P in enumerate_points(module, r, budget))
    return dict(sorted(counts.items(), reverse=True))


def dominance_maximal(keys) -> list[Partition]:
    keys = list(keys)
    return [p for p in keys if not any(q != p and dominance_leq(p, q) for q in keys)]
