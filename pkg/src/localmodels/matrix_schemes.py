"""Defining ideals of nilpotent-type matrix schemes.

The generic matrix ``A`` has entries ``a_ij`` ordered row-major
(``a11 > a12 > ... > a1r > a21 > ...``). Exterior powers are indexed by
``t``-subsets of ``{0..r-1}`` in lexicographic order and the ``(S, T)``
entry of ``wedge_power(M, t)`` is the minor with rows ``S`` and columns
``T``; no extra sign convention is applied.

Eigenvalues for the generic-fibre ideal are explicit, pairwise distinct
field scalars, so the Galois group acting on them is trivial and the
Galois sum collapses to a single term.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import isqrt
from typing import Iterable, Sequence

from .errors import ContextMismatch, DistinctnessError, RangeError
from .partitions import as_partition
from .polyring import QQ, Field, Ideal, PolyRing, Polynomial


def matrix_variable_names(r: int) -> list[str]:
    if r < 10:
        return [f"a{i}{j}" for i in range(1, r + 1) for j in range(1, r + 1)]
    return [f"a{i}_{j}" for i in range(1, r + 1) for j in range(1, r + 1)]


def matrix_ring(r: int, field: Field = QQ, order: str = "grevlex") -> PolyRing:
    return PolyRing(tuple(matrix_variable_names(r)), field, order)


def diagonal_ring(r: int, field: Field = QQ, order: str = "grevlex") -> PolyRing:
    return PolyRing(tuple(f"X{i}" for i in range(1, r + 1)), field, order)


# --- polynomial matrices ------------------------------------------------------

class PolyMatrix:
    """A dense matrix of Polynomials sharing one ring."""

    def __init__(self, ring: PolyRing, rows: Sequence[Sequence[Polynomial]]):
        self.ring = ring
        self.rows = [list(row) for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, ring: PolyRing, n: int) -> "PolyMatrix":
        one, zero = ring.one(), ring.zero()
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: PolyRing, n: int, m: int | None = None) -> "PolyMatrix":
        zero = ring.zero()
        return cls(ring, [[zero] * (n if m is None else m) for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = self.ring.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def __add__(self, other):
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PolyMatrix(self.ring, [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[a * c for a in row] for row in self.rows])

    def __pow__(self, k: int) -> "PolyMatrix":
        result = PolyMatrix.identity(self.ring, self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def entries(self) -> list[Polynomial]:
        return [a for row in self.rows for a in row]

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def substitute(self, assignment, target=None) -> "PolyMatrix":
        target = target or self.ring
        return PolyMatrix(target, [[a.substitute(assignment, target) for a in row] for row in self.rows])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __repr__(self):
        return "PolyMatrix([" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows) + "])"


def determinant(M: PolyMatrix) -> Polynomial:
    """Laplace expansion organised as a dynamic program over column subsets."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    ring = M.ring
    if n == 0:
        return ring.one()
    # minors[cols] = det of rows n-k..n-1 restricted to cols (|cols| = k)
    minors = {(j,): M.rows[n - 1][j] for j in range(n)}
    for k in range(2, n + 1):
        row = M.rows[n - k]
        nxt = {}
        for cols in combinations(range(n), k):
            acc = ring.zero()
            for pos, j in enumerate(cols):
                a = row[j]
                if not a:
                    continue
                rest = minors[cols[:pos] + cols[pos + 1:]]
                if not rest:
                    continue
                term = a * rest
                acc = acc - term if pos % 2 else acc + term
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


class GenericMatrix(PolyMatrix):
    """The r x r matrix of indeterminates ``a_ij``."""

    def __init__(self, r: int, field: Field = QQ, order: str = "grevlex"):
        if r < 1:
            raise RangeError("matrix size must be positive")
        ring = matrix_ring(r, field, order)
        gens = ring.gens()
        super().__init__(ring, [gens[i * r:(i + 1) * r] for i in range(r)])
        self.r = r

    def __repr__(self):
        return f"GenericMatrix(r={self.r}, field={self.ring.field})"


def generic_matrix(r: int, field: Field = QQ) -> GenericMatrix:
    return GenericMatrix(r, field)


# --- exterior powers -------------------------------------------------------------

@dataclass
class WedgeOperator:
    """An operator on the t-th exterior power, basis indexed by lex-ordered t-subsets."""

    t: int
    r: int
    matrix: PolyMatrix

    @property
    def index(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.r), self.t))

    def __matmul__(self, other: "WedgeOperator") -> "WedgeOperator":
        if (self.t, self.r) != (other.t, other.r):
            raise ValueError("exterior degrees differ")
        return WedgeOperator(self.t, self.r, self.matrix @ other.matrix)

    def __add__(self, other):
        return WedgeOperator(self.t, self.r, self.matrix + other.matrix)

    def __sub__(self, other):
        return WedgeOperator(self.t, self.r, self.matrix - other.matrix)

    def scale(self, c) -> "WedgeOperator":
        return WedgeOperator(self.t, self.r, self.matrix.scale(c))

    def entries(self) -> list[Polynomial]:
        return self.matrix.entries()

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other):
        return isinstance(other, WedgeOperator) and (self.t, self.r) == (other.t, other.r) and self.matrix == other.matrix


def _check_t(t: int, r: int):
    if not 1 <= t <= r:
        raise RangeError(f"exterior degree t={t} outside 1..{r}")


def wedge_power(M: PolyMatrix, t: int) -> WedgeOperator:
    r = M.nrows
    _check_t(t, r)
    idx = list(combinations(range(r), t))
    rows = [[determinant(M.submatrix(S, T)) for T in idx] for S in idx]
    return WedgeOperator(t, r, PolyMatrix(M.ring, rows))


def wedge_identity(ring: PolyRing, r: int, t: int) -> WedgeOperator:
    _check_t(t, r)
    n = len(list(combinations(range(r), t)))
    return WedgeOperator(t, r, PolyMatrix.identity(ring, n))


def compositions(h: int, t: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the monomials of the complete symmetric function h_h(x_1..x_t)."""
    if t == 1:
        return [(h,)]
    return [(first,) + rest for first in range(h, -1, -1) for rest in compositions(h - first, t - 1)]


def compositions_stars_and_bars(h: int, t: int) -> list[tuple[int, ...]]:
    """Same set as :func:`compositions`, enumerated through bar positions."""
    out = []
    for bars in combinations(range(h + t - 1), t - 1):
        cuts = (-1,) + bars + (h + t - 1,)
        out.append(tuple(cuts[k + 1] - cuts[k] - 1 for k in range(t)))
    return out


def _powers(A: PolyMatrix, h: int) -> list[PolyMatrix]:
    out = [PolyMatrix.identity(A.ring, A.nrows)]
    for _ in range(h):
        out.append(out[-1] @ A)
    return out


def S_apply(A: PolyMatrix, h: int, indices: Sequence[int], powers=None, exponents=None) -> dict:
    """Coordinates of ``sum A^{h_1} e_{i_1} ^ ... ^ A^{h_t} e_{i_t}`` in the lex wedge basis.

    ``indices`` is an ordered tuple (repeats allowed, giving zero). Returns
    ``{subset: Polynomial}`` with zero coordinates omitted.
    """
    r = A.nrows
    t = len(indices)
    powers = powers or _powers(A, h)
    exponents = exponents if exponents is not None else compositions(h, t)
    ring = A.ring
    out: dict = {}
    for J in combinations(range(r), t):
        acc = ring.zero()
        for hs in exponents:
            cols = [[powers[hk].rows[j][ik] for hk, ik in zip(hs, indices)] for j in J]
            acc = acc + determinant(PolyMatrix(ring, cols))
        if acc:
            out[J] = acc
    return out


def S_operator(A: PolyMatrix, t: int, h: int, enumeration: str = "nested") -> WedgeOperator:
    """The operator ``S^t_h(A)`` on the t-th exterior power."""
    r = A.nrows
    _check_t(t, r)
    if h < 0:
        raise RangeError("h must be nonnegative")
    exps = compositions(h, t) if enumeration == "nested" else compositions_stars_and_bars(h, t)
    powers = _powers(A, h)
    idx = list(combinations(range(r), t))
    zero = A.ring.zero()
    cols = [S_apply(A, h, I, powers, exps) for I in idx]
    rows = [[cols[c].get(J, zero) for c in range(len(idx))] for J in idx]
    return WedgeOperator(t, r, PolyMatrix(A.ring, rows))


def char_poly_coeffs(A: PolyMatrix) -> list[Polynomial]:
    """``[sigma_1, ..., sigma_r]``: sums of principal minors, so det(T - A) = sum (-1)^h sigma_h T^(r-h)."""
    r = A.nrows
    out = []
    for h in range(1, r + 1):
        acc = A.ring.zero()
        for S in combinations(range(r), h):
            acc = acc + determinant(A.submatrix(S, S))
        out.append(acc)
    return out


def F_operator(A: PolyMatrix, t: int, h: int, sigmas=None) -> WedgeOperator:
    r = A.nrows
    _check_t(t, r)
    if h < 0:
        raise RangeError("h must be nonnegative")
    sigmas = sigmas if sigmas is not None else char_poly_coeffs(A)
    total = S_operator(A, t, h)
    for i in range(1, min(h, r) + 1):
        term = S_operator(A, t, h - i).scale(sigmas[i - 1])
        total = total - term if i % 2 else total + term
    return total


# --- ideals ---------------------------------------------------------------------

def _tagged_ideal(ring, tagged: Iterable[tuple[str, Polynomial]]) -> Ideal:
    tagged = list(tagged)
    return Ideal(ring, [p for _, p in tagged], [t for t, _ in tagged])


def char_poly_ideal(r: int, field: Field = QQ) -> Ideal:
    A = GenericMatrix(r, field)
    return _tagged_ideal(A.ring, ((f"sigma{h}", s) for h, s in enumerate(char_poly_coeffs(A), 1)))


def s_block_ideal(r: int, field: Field = QQ) -> Ideal:
    """Entries of ``S^t_h(A)`` for ``t + h = r + 1``."""
    A = GenericMatrix(r, field)
    tagged = []
    for t in range(1, r + 1):
        h = r + 1 - t
        tagged += [(f"t={t},h={h}", p) for p in S_operator(A, t, h).entries()]
    return _tagged_ideal(A.ring, tagged)


def matrix_power_entries(r: int, e: int, field: Field = QQ) -> list[Polynomial]:
    A = GenericMatrix(r, field)
    return (A ** e).entries()


def naive_special_ideal(r: int, e: int, field: Field = QQ) -> Ideal:
    """Entries of ``A^e`` together with the characteristic polynomial coefficients."""
    if r < 1 or e < 1:
        raise RangeError("need r >= 1 and e >= 1")
    A = GenericMatrix(r, field)
    tagged = [(f"A^{e}", p) for p in (A ** e).entries()]
    tagged += [(f"sigma{h}", s) for h, s in enumerate(char_poly_coeffs(A), 1)]
    return _tagged_ideal(A.ring, tagged)


def dcp_special_ideal(r: int, rvec, field: Field = QQ) -> Ideal:
    """Entries of ``S^t_h(A) * wedge^t(A^k)`` for k = 0..e, t + h = r - n_k + 1."""
    rvec = as_partition(rvec)
    if rvec.size != r or r < 1:
        raise RangeError(f"rvec {list(rvec)} does not sum to r={r}")
    A = GenericMatrix(r, field)
    e = len(rvec)
    n = [0]
    for part in rvec:
        n.append(n[-1] + part)
    tagged = []
    for k in range(e + 1):
        Ak = A ** k
        for t in range(1, r + 1):
            h = r - n[k] + 1 - t
            if h < 0:
                continue
            op = S_operator(A, t, h) @ wedge_power(Ak, t)
            tagged += [(f"k={k},t={t},h={h}", p) for p in op.entries()]
    return _tagged_ideal(A.ring, tagged)


@dataclass(frozen=True)
class EigenvalueData:
    """Distinct scalars ``a_i`` with multiplicities ``r_i``."""

    pairs: tuple

    def __init__(self, pairs):
        pairs = tuple((a, int(m)) for a, m in pairs)
        if any(m < 1 for _, m in pairs):
            raise RangeError("multiplicities must be positive")
        object.__setattr__(self, "pairs", pairs)

    @property
    def e(self) -> int:
        return len(self.pairs)

    @property
    def r(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def values(self):
        return [a for a, _ in self.pairs]

    @property
    def multiplicities(self):
        return [m for _, m in self.pairs]

    def multiset(self):
        return [a for a, m in self.pairs for _ in range(m)]

    def check_distinct(self, field: Field):
        vals = [field(a) for a in self.values]
        if len(set(vals)) != len(vals):
            raise DistinctnessError(f"eigenvalues {self.values} collide in {field.name}")
        return vals


def elementary_symmetric(values, field: Field) -> list:
    """``[e_1, ..., e_n]`` of a list of field elements."""
    coeffs = [field(1)]
    for v in values:
        nxt = coeffs + [field(0)]
        for k in range(len(coeffs), 0, -1):
            nxt[k] = field(nxt[k] + coeffs[k - 1] * v)
        coeffs = nxt
    return coeffs[1:]


def dcp_generic_ideal(eig: EigenvalueData, field: Field = QQ) -> Ideal:
    """Characteristic polynomial fixed to prod (T - a_i)^{r_i} plus ``F^t_h(A) * wedge^t(Q_f(A))``.

    In ``F^t_h`` the coefficients are those of the part of P(T) not touched by f, so the
    diagonal matrix with the given eigenvalues satisfies every generator.
    """
    vals = eig.check_distinct(field)
    r = eig.r
    A = GenericMatrix(r, field)
    ring = A.ring
    sig = char_poly_coeffs(A)
    targets = elementary_symmetric([field(a) for a in eig.multiset()], field)
    tagged = [(f"sigma{h}", s - targets[h - 1]) for h, s in enumerate(sig, 1)]
    ident = PolyMatrix.identity(ring, r)
    shifted = [A - ident.scale(a) for a in vals]
    for f in product(*(range(m + 1) for m in eig.multiplicities)):
        Q = ident
        for i, fi in enumerate(f):
            for _ in range(fi):
                Q = Q @ shifted[i]
        used = sum(m for m, fi in zip(eig.multiplicities, f) if fi)
        # coefficients of the factor of P(T) left over by the support of f
        rest = [field(a) for (a, m), fi in zip(eig.pairs, f) if not fi for _ in range(m)]
        coeffs = [ring.constant(c) for c in elementary_symmetric(rest, field)]
        coeffs += [ring.zero()] * (r - len(coeffs))
        for t in range(1, r + 1):
            h = r - used + 1 - t
            if h < 0:
                continue
            op = F_operator(A, t, h, coeffs) @ wedge_power(Q, t)
            fs = ",".join(map(str, f))
            tagged += [(f"f=({fs}),t={t},h={h}", p) for p in op.entries()]
    return _tagged_ideal(ring, tagged)


def e2_ideal(r1: int, r2: int, field: Field = QQ) -> Ideal:
    """``A^2 = 0``, all (r2+1)-minors of A, and the characteristic polynomial coefficients."""
    if r1 < r2 or r2 < 0 or r1 + r2 < 1:
        raise RangeError(f"need r1 >= r2 >= 0 and r1 + r2 >= 1; got {r1}, {r2}")
    r = r1 + r2
    A = GenericMatrix(r, field)
    tagged = [("A^2", p) for p in (A @ A).entries()]
    if r2 + 1 <= r:
        tagged += [(f"minor{r2 + 1}", p) for p in wedge_power(A, r2 + 1).entries()]
    tagged += [(f"sigma{h}", s) for h, s in enumerate(char_poly_coeffs(A), 1)]
    return _tagged_ideal(A.ring, tagged)


def matrix_size_of(ring: PolyRing) -> int:
    r = isqrt(ring.nvars)
    if r * r != ring.nvars or list(ring.variables) != matrix_variable_names(r):
        raise ContextMismatch(f"{ring.variables} is not a matrix-entry ring")
    return r


def diagonal_restriction(ideal: Ideal) -> Ideal:
    """Substitute ``a_ii -> X_i`` and ``a_ij -> 0`` (i != j); zero generators dropped."""
    r = matrix_size_of(ideal.ring)
    target = diagonal_ring(r, ideal.ring.field, ideal.ring.order)
    X = target.gens()
    names = ideal.ring.variables
    assignment = {}
    for i in range(r):
        for j in range(r):
            assignment[names[i * r + j]] = X[i] if i == j else 0
    images = [g.substitute(assignment, target) for g in ideal.generators]
    return Ideal(target, images, ideal.tags)


def diagonal_coinvariant_ideal(r: int, e: int, field: Field = QQ) -> Ideal:
    """``(e_1, ..., e_r, X_1^e, ..., X_r^e)`` built directly in ``X_1..X_r``."""
    ring = diagonal_ring(r, field)
    X = ring.gens()
    tagged = []
    for k in range(1, r + 1):
        acc = ring.zero()
        for S in combinations(X, k):
            term = ring.one()
            for v in S:
                term = term * v
            acc = acc + term
        tagged.append((f"e{k}", acc))
    tagged += [(f"X{i + 1}^{e}", v ** e) for i, v in enumerate(X)]
    return _tagged_ideal(ring, tagged)


def evaluate_matrix(entries: Sequence[Polynomial], point) -> list:
    return [p.evaluate(point) for p in entries]


def alternating_sign(perm: Sequence[int]) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def permuted_indices(indices: Sequence[int]):
    """All orderings of ``indices`` with their signs."""
    for perm in permutations(range(len(indices))):
        yield tuple(indices[k] for k in perm), alternating_sign(perm)
