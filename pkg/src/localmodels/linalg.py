"""Dense exact linear algebra over QQ or GF(p).

Matrices are lists of row lists whose entries are already normalised field
elements (``Fraction`` for QQ, ints in ``[0, p)`` for GF(p)).
"""
from __future__ import annotations

import random
from itertools import combinations, product
from typing import Iterator

from .polyring.field import Field


def identity(n: int, F: Field):
    return [[F(1 if i == j else 0) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int, F: Field):
    return [[F(0)] * m for _ in range(n)]


def matmul(A, B, F: Field):
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(m):
            acc = 0
            for a, brow in zip(row, B):
                if a:
                    acc += a * brow[j]
            new.append(F(acc))
        out.append(new)
    return out


def matvec(A, v, F: Field):
    return [F(sum(a * x for a, x in zip(row, v))) for row in A]


def matpow(A, k: int, F: Field):
    out = identity(len(A), F)
    for _ in range(k):
        out = matmul(out, A, F)
    return out


def is_zero(A) -> bool:
    return all(not x for row in A for x in row)


def rref(rows, F: Field):
    """Reduced row echelon form. Returns ``(nonzero rows, pivot columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][c])
        M[rank] = [F(x * inv) for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [F(x - f * y) for x, y in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
        if rank == len(M):
            break
    return M[:rank], pivots


def rank(A, F: Field) -> int:
    return len(rref(A, F)[1])


def inverse(A, F: Field):
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(n, F))]
    R, piv = rref(aug, F)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def transpose(A):
    return [list(col) for col in zip(*A)]


def random_invertible(n: int, F: Field, rng: random.Random):
    if F.is_rational:
        pick = lambda: F(rng.randint(-3, 3))  # noqa: E731
    else:
        pick = lambda: F(rng.randrange(F.characteristic))  # noqa: E731
    while True:
        g = [[pick() for _ in range(n)] for _ in range(n)]
        if rank(g, F) == n:
            return g


def conjugate(g, A, F: Field):
    return matmul(matmul(g, A, F), inverse(g, F), F)


def kernel(A, F: Field):
    """Basis (as rows) of ``{x : A x = 0}``."""
    ncols = len(A[0]) if A else 0
    R, piv = rref(A, F)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [F(0)] * ncols
        v[fc] = F(1)
        for row, pc in zip(R, piv):
            v[pc] = F(-row[fc])
        basis.append(v)
    return basis


def coordinates_in(rref_rows, pivots, v):
    """Coordinates of ``v`` in an RREF basis, read off at the pivot columns."""
    return [v[c] for c in pivots]


def in_span(rref_rows, pivots, v, F: Field) -> bool:
    w = list(v)
    for row, c in zip(rref_rows, pivots):
        if w[c]:
            f = w[c]
            w = [F(x - f * y) for x, y in zip(w, row)]
    return not any(w)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def echelon_subspaces(n: int, k: int, F: Field) -> Iterator[list[list[int]]]:
    """Every k-dimensional subspace of GF(p)^n, once, as its RREF basis (rows)."""
    if F.is_rational:
        raise ValueError("subspace enumeration needs a finite field")
    if k < 0 or k > n:
        return
    if k == 0:
        yield []
        return
    elems = list(F.elements())
    for pivots in combinations(range(n), k):
        free = [(i, c) for i in range(k) for c in range(pivots[i] + 1, n) if c not in pivots]
        for values in product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield rows


def projective_points(n: int, F: Field) -> Iterator[list[int]]:
    """Normalised representatives of the lines in GF(p)^n."""
    for rows in echelon_subspaces(n, 1, F):
        yield rows[0]
