"""Nilpotent orbits of concrete matrices over QQ and GF(p)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, NotNilpotent, RangeError, SizeMismatch
from .partitions import Partition, as_partition, dominance_leq, dual
from .polyring.field import QQ, Field


@dataclass(frozen=True)
class FqMatrix:
    """Square matrix with entries normalised in ``field``."""

    rows: tuple
    field: Field = QQ

    def __init__(self, rows, field: Field = QQ):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "field", field)

    @property
    def size(self) -> int:
        return len(self.rows)

    def as_lists(self):
        return [list(row) for row in self.rows]

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        return FqMatrix(linalg.matmul(self.as_lists(), other.as_lists(), self.field), self.field)

    def power(self, k: int) -> "FqMatrix":
        return FqMatrix(linalg.matpow(self.as_lists(), k, self.field), self.field)

    def rank(self) -> int:
        return linalg.rank(self.as_lists(), self.field)

    def is_zero(self) -> bool:
        return linalg.is_zero(self.rows)

    def conjugate_by(self, g) -> "FqMatrix":
        return FqMatrix(linalg.conjugate(g, self.as_lists(), self.field), self.field)

    def flat(self) -> tuple:
        return tuple(x for row in self.rows for x in row)


def jordan_matrix(s, field: Field = QQ) -> FqMatrix:
    """Block-diagonal nilpotent matrix with Jordan blocks of sizes ``s_1 >= s_2 >= ...``."""
    s = as_partition(s)
    n = s.size
    M = [[0] * n for _ in range(n)]
    start = 0
    for b in s:
        for i in range(start, start + b - 1):
            M[i][i + 1] = 1
        start += b
    return FqMatrix(M, field)


def power_ranks(A: FqMatrix) -> list[int]:
    """``[rank A^0, rank A^1, ..., rank A^n]``."""
    n = A.size
    out = [n]
    P = A.as_lists()
    for _ in range(n):
        out.append(linalg.rank(P, A.field))
        P = linalg.matmul(P, A.as_lists(), A.field)
    return out


def is_nilpotent(A: FqMatrix) -> bool:
    return A.size == 0 or A.power(A.size).is_zero()


def jordan_type_of(A: FqMatrix) -> Partition:
    """Jordan type from rank drops: ``#{i : s_i >= k} = rank A^(k-1) - rank A^k``."""
    if not is_nilpotent(A):
        raise NotNilpotent("A^r is not zero")
    ranks = power_ranks(A)
    columns = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return dual(Partition(c for c in columns if c))


def closure_leq(s1, s2) -> bool:
    """Orbit of ``s1`` lies in the closure of the orbit of ``s2``."""
    return dominance_leq(s1, s2)


def in_orbit_closure_by_ranks(A: FqMatrix, t) -> bool:
    t = as_partition(t)
    if t.size != A.size:
        raise SizeMismatch(f"matrix of size {A.size} vs partition of {t.size}")
    return all(a <= b for a, b in zip(power_ranks(A), power_ranks(jordan_matrix(t, A.field))))


def in_orbit_closure(A: FqMatrix, t) -> bool:
    """Decided twice, by dominance of the Jordan type and by rank inequalities."""
    t = as_partition(t)
    if t.size != A.size:
        raise SizeMismatch(f"matrix of size {A.size} vs partition of {t.size}")
    by_type = dominance_leq(jordan_type_of(A), t)
    by_rank = in_orbit_closure_by_ranks(A, t)
    assert by_type == by_rank, "dominance and rank criteria disagree"
    return by_type


@dataclass(frozen=True)
class PartialFlagSpec:
    """Flag type ``0 = F_e < ... < F_0 = k^r`` with ``corank F_k = n_k = r_1 + ... + r_k``."""

    rvec: Partition

    def __init__(self, rvec):
        object.__setattr__(self, "rvec", as_partition(rvec))

    @property
    def r(self) -> int:
        return self.rvec.size

    @property
    def e(self) -> int:
        return len(self.rvec)

    @property
    def coranks(self) -> list[int]:
        out, acc = [], 0
        for x in self.rvec:
            acc += x
            out.append(acc)
        return out

    @property
    def t(self) -> Partition:
        return dual(self.rvec)


def flag_count(spec: PartialFlagSpec, q: int) -> int:
    """Number of partial flags of this type over GF(q) (q-multinomial coefficient)."""
    total, left = 1, spec.r
    for part in spec.rvec:
        total *= linalg.gaussian_binomial(left, part, q)
        left -= part
    return total


@dataclass(frozen=True)
class SpringerCount:
    count: int
    flags_enumerated: int


def springer_fiber_count(A: FqMatrix, spec: PartialFlagSpec, budget: Budget = DEFAULT_BUDGET) -> SpringerCount:
    """Count partial flags with ``A F_{k-1} <= F_k`` for every k.

    ``flags_enumerated`` is the number of subspaces visited by the search,
    counting partial chains as well as complete ones.
    """
    F = A.field
    if F.is_rational:
        raise ValueError("springer_fiber_count needs a finite field")
    if spec.r != A.size:
        raise SizeMismatch(f"flag type of size {spec.r} for a {A.size}x{A.size} matrix")
    if not is_nilpotent(A):
        raise NotNilpotent("A^r is not zero")
    estimate = flag_count(spec, F.characteristic)
    if estimate > budget.max_flags:
        raise BudgetExceeded(
            f"{estimate} flags exceed max_flags={budget.max_flags}",
            budget="max_flags", estimate=estimate,
        )
    r = A.size
    Am = A.as_lists()
    dims = [r - n for n in spec.coranks]
    visited = 0

    def search(k: int, basis) -> int:
        nonlocal visited
        if k == len(dims):
            return 1
        target = dims[k]
        m = len(basis)
        if m == 0:
            return search(k + 1, basis) if target == 0 else 0
        R, piv = linalg.rref(basis, F)
        images = [linalg.matvec(Am, b, F) for b in R]
        coords = [linalg.coordinates_in(R, piv, v) for v in images]
        U, upiv = linalg.rref(coords, F)
        u = len(U)
        j = target - u
        if j < 0 or j > m - u:
            return 0
        complement = [c for c in range(m) if c not in upiv]
        total = 0
        for W in linalg.echelon_subspaces(m - u, j, F):
            lifted = [list(row) for row in U]
            for w in W:
                v = [0] * m
                for c, x in zip(complement, w):
                    v[c] = x
                lifted.append(v)
            ambient = [
                [F(sum(cf * R[i][col] for i, cf in enumerate(vec))) for col in range(r)]
                for vec in lifted
            ]
            visited += 1
            total += search(k + 1, ambient)
        return total

    whole = linalg.identity(r, F)
    count = search(0, whole)
    return SpringerCount(count, visited)


def nilpotent_representatives(r: int, field: Field) -> dict[Partition, FqMatrix]:
    from .partitions import partitions
    return {s: jordan_matrix(s, field) for s in partitions(r)}


def all_matrices(n: int, field: Field):
    """Every n x n matrix over a finite field, as flat tuples."""
    from itertools import product
    if field.is_rational:
        raise ValueError("finite field required")
    return product(field.elements(), repeat=n * n)


def matrix_from_flat(flat: Sequence, n: int, field: Field) -> FqMatrix:
    return FqMatrix([flat[i * n:(i + 1) * n] for i in range(n)], field)


def check_partition_size(s, n: int):
    s = as_partition(s)
    if s.size != n:
        raise RangeError(f"partition {list(s)} does not have size {n}")
    return s
