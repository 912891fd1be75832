"""Partition combinatorics.

Partitions are stored in canonical form: a tuple of weakly decreasing
positive integers (trailing zeros trimmed). Operations that need a fixed
length, such as dominance or the pairing with ``2*rho``, zero-pad
internally.

Charge convention
-----------------
Kostka-Foulkes polynomials are computed as the generating function of the
Lascoux-Schuetzenberger charge over semistandard tableaux of shape
``lam`` and content ``mu``. The reading word of a tableau (English
notation) concatenates its rows from the bottom row to the top row, each
read left to right. For a word of partition content the charge is
computed by repeatedly extracting standard subwords: scan leftwards
(cyclically) from the right end for a 1, then continue leftwards for a 2,
and so on. The letter 1 gets index 0; letter i+1 keeps the index of i if
it was found without wrapping around the end of the word, and gets
index+1 otherwise. The charge is the sum of all indices. With this
convention ``K_{lam,mu}(1)`` is the Kostka number and ``K_{lam,lam} = 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import RangeError, SizeMismatch


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers, zeros trimmed."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self) > length:
            raise RangeError(f"{list(self)} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def dual(self) -> "Partition":
        return dual(self)

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(json.loads(text))

    def __repr__(self):
        return f"Partition({list(self)})"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def dual(p) -> Partition:
    """Transpose of the Young diagram: ``t_k = #{i : p_i >= k}``."""
    p = as_partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def _check_same_size(a: Partition, b: Partition) -> None:
    if a.size != b.size:
        raise SizeMismatch(f"|{list(a)}| = {a.size} differs from |{list(b)}| = {b.size}")


def dominance_leq(a, b) -> bool:
    """True iff every prefix sum of ``a`` is at most that of ``b``."""
    a, b = as_partition(a), as_partition(b)
    _check_same_size(a, b)
    n = max(len(a), len(b))
    return all(x <= y for x, y in zip(accumulate(a.padded(n)), accumulate(b.padded(n))))


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order (largest first)."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(n, max_part, max_len):
        yield Partition(parts)


@dataclass(frozen=True)
class StratumSet:
    """The partitions of ``r`` with at most ``d`` parts, each at most ``e``."""

    r: int
    e: int
    d: int
    members: tuple[Partition, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return as_partition(p) in self.members

    def maximum(self) -> Partition:
        return _unique_extremum(self.members, top=True)

    def minimum(self) -> Partition:
        return _unique_extremum(self.members, top=False)


def _unique_extremum(members, top: bool) -> Partition:
    found = [
        p for p in members
        if all((dominance_leq(q, p) if top else dominance_leq(p, q)) for q in members)
    ]
    if len(found) != 1:
        raise ValueError("no unique extremum")
    return found[0]


def enumerate_strata(r: int, e: int, d: int) -> StratumSet:
    if r < 0 or e < 1 or d < 1:
        raise RangeError(f"need r >= 0, e >= 1, d >= 1; got r={r}, e={e}, d={d}")
    if r > e * d:
        raise RangeError(f"r={r} exceeds e*d={e * d}")
    return StratumSet(r, e, d, tuple(partitions(r, max_part=e, max_len=d)))


def s_max(r: int, e: int) -> Partition:
    """``(e^c, f)`` with ``r = c*e + f``, ``0 <= f < e``."""
    if r < 0 or e < 1:
        raise RangeError(f"need r >= 0, e >= 1; got r={r}, e={e}")
    c, f = divmod(r, e)
    return Partition([e] * c + [f])


def r_min(r: int, e: int) -> Partition:
    """``((c+1)^f, c^(e-f))``, the dual of :func:`s_max`."""
    if r < 0 or e < 1:
        raise RangeError(f"need r >= 0, e >= 1; got r={r}, e={e}")
    c, f = divmod(r, e)
    return Partition([c + 1] * f + [c] * (e - f))


def s_min(r: int, d: int) -> Partition:
    if r < 0 or d < 1:
        raise RangeError(f"need r >= 0, d >= 1; got r={r}, d={d}")
    u, j = divmod(r, d)
    return Partition([u + 1] * j + [u] * (d - j))


def affine_orbit_dim(s, d: int) -> int:
    """Pairing of ``s`` (padded to length ``d``) with ``2*rho = (d-1, d-3, ..., 1-d)``."""
    s = as_partition(s)
    return sum(x * (d + 1 - 2 * i) for i, x in enumerate(s.padded(d), start=1))


def special_fiber_dim(r: int, e: int, d: int) -> int:
    if r < 0 or e < 1 or d < 1 or r > e * d:
        raise RangeError(f"need 0 <= r <= e*d; got r={r}, e={e}, d={d}")
    c, f = divmod(r, e)
    return d * r - e * c * c - (2 * c + 1) * f


def generic_fiber_dim(rvec, d: int) -> int:
    """Dimension of the product of Grassmannians ``Gr(r_i, d)``."""
    rvec = as_partition(rvec)
    if any(x > d for x in rvec):
        raise RangeError(f"part of {list(rvec)} exceeds d={d}")
    return sum(x * (d - x) for x in rvec)


def nilpotent_orbit_dim(s) -> int:
    s = as_partition(s)
    return s.size ** 2 - sum(x * x for x in dual(s))


def coinvariant_dim_formula(r: int, e: int) -> int:
    if r < 0 or e < 1:
        raise RangeError(f"need r >= 0, e >= 1; got r={r}, e={e}")
    c, f = divmod(r, e)
    den = factorial(c + 1) ** f * factorial(c) ** (e - f)
    q, rem = divmod(factorial(r), den)
    assert rem == 0
    return q


# --- tableaux -------------------------------------------------------------

def semistandard_tableaux(shape, content) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of ``shape`` with ``content[i]`` entries equal to ``i+1``.

    Filled letter by letter: the cells holding letter ``k`` form a horizontal
    strip added to the shape filled by letters ``< k``.
    """
    shape = as_partition(shape)
    content = tuple(int(c) for c in content)
    if sum(content) != shape.size:
        return
    nrows = len(shape)

    def strips(inner, n, outer):
        # horizontal strips of size n from inner inside outer, rows top-down
        res = []

        def rec(i, left, cur):
            if i == nrows:
                if left == 0:
                    res.append(tuple(cur))
                return
            hi = outer[i] if i == 0 else min(outer[i], inner[i - 1])
            for v in range(min(hi, inner[i] + left), inner[i] - 1, -1):
                cur.append(v)
                rec(i + 1, left - (v - inner[i]), cur)
                cur.pop()

        rec(0, n, [])
        return res

    def rec(k, inner, layers):
        if k == len(content):
            if list(inner) == list(shape):
                yield layers
            return
        for nxt in strips(inner, content[k], shape):
            yield from rec(k + 1, nxt, layers + [nxt])

    for layers in rec(0, (0,) * nrows, []):
        rows = [[] for _ in range(nrows)]
        prev = (0,) * nrows
        for letter, layer in enumerate(layers, start=1):
            for i in range(nrows):
                rows[i].extend([letter] * (layer[i] - prev[i]))
            prev = layer
        yield tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: tuple[int, ...]) -> int:
    return sum(1 for _ in semistandard_tableaux(lam, mu))


def kostka_number(lam, mu) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_size(lam, mu)
    if not dominance_leq(mu, lam):
        return 0
    return _kostka(lam, tuple(mu))


def reading_word(tableau) -> list[int]:
    word = []
    for row in reversed(tableau):
        word.extend(row)
    return word


def charge(word) -> int:
    """Lascoux-Schuetzenberger charge of a word with partition content."""
    word = list(word)
    total = 0
    positions = list(range(len(word)))
    while positions:
        letters = [word[i] for i in positions]
        top = max(letters)
        n = len(positions)
        # position (within ``positions``) of the rightmost 1
        cur = max(j for j in range(n) if letters[j] == 1)
        picked = [cur]
        index = 0
        for letter in range(2, top + 1):
            wrapped = False
            j = cur - 1
            while True:
                if j < 0:
                    j = n - 1
                    wrapped = True
                if letters[j] == letter:
                    break
                j -= 1
            if wrapped:
                index += 1
            total += index
            cur = j
            picked.append(j)
        drop = {positions[j] for j in picked}
        positions = [i for i in positions if i not in drop]
    return total


def kostka_foulkes(lam, mu) -> dict[int, int]:
    """Kostka-Foulkes polynomial as ``{degree: coefficient}`` (charge generating function)."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_size(lam, mu)
    poly: dict[int, int] = {}
    if not dominance_leq(mu, lam):
        return poly
    for tab in semistandard_tableaux(lam, mu):
        c = charge(reading_word(tab))
        poly[c] = poly.get(c, 0) + 1
    return dict(sorted(poly.items()))


def format_q_polynomial(poly: dict[int, int], var: str = "q") -> str:
    if not poly:
        return "0"
    out = []
    for deg, c in sorted(poly.items()):
        mono = "" if deg == 0 else (var if deg == 1 else f"{var}^{deg}")
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)


def standard_tableaux_count(lam) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = as_partition(lam)
    lamd = dual(lam)
    hooks = prod(
        (lam[i] - j - 1) + (lamd[j] - i - 1) + 1
        for i in range(len(lam)) for j in range(lam[i])
    )
    return factorial(lam.size) // hooks
