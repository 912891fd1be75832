"""Multiplicities of strata: Kostka numbers, exterior-power tensor products, characters.

Three independent routes to the same integers:

* ``nearby_cycle_multiplicity`` counts semistandard tableaux,
* ``tensor_minuscule_decompose`` adds vertical strips (Pieri rule for
  tensoring with an exterior power of the standard representation of GL_d),
* ``character_multiplicity`` pairs an irreducible character of S_r, evaluated
  by the Murnaghan-Nakayama rule, with the sign character induced from a
  Young subgroup.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial, prod

from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, RangeError, SizeMismatch
from .partitions import (
    Partition,
    as_partition,
    dominance_leq,
    dual,
    kostka_number,
    partitions,
)
from .report import Case, VerificationReport


@dataclass
class WeightMultiplicityTable:
    d: int
    rvec: Partition
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rvec = as_partition(self.rvec)

    def sorted_items(self) -> list[tuple[Partition, int]]:
        """Entries by decreasing partition, which refines dominance-descending order."""
        return sorted(self.entries.items(), reverse=True)

    def total_dimension(self) -> int:
        return sum(m * gl_dimension(lam, self.d) for lam, m in self.entries.items())

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "rvec": list(self.rvec),
            "entries": [{"partition": list(lam), "multiplicity": m} for lam, m in self.sorted_items()],
        }


def _vertical_strips(shape: tuple[int, ...], k: int, d: int):
    rows = list(shape) + [0] * (d - len(shape))
    for chosen in combinations(range(d), k):
        new = list(rows)
        for i in chosen:
            new[i] += 1
        if all(new[i] >= new[i + 1] for i in range(d - 1)):
            yield Partition(new)


def tensor_minuscule_decompose(d: int, rvec) -> WeightMultiplicityTable:
    """Decompose the tensor product of the exterior powers ``wedge^{r_i}`` of GL_d."""
    rvec = as_partition(rvec)
    if d < 1:
        raise RangeError("d must be positive")
    if any(x > d for x in rvec):
        raise RangeError(f"exterior power of degree {max(rvec)} exceeds d={d}")
    layer = Counter({Partition(): 1})
    for k in rvec:
        nxt = Counter()
        for shape, mult in layer.items():
            for new in _vertical_strips(tuple(shape), k, d):
                nxt[new] += mult
        layer = nxt
    return WeightMultiplicityTable(d, rvec, dict(layer))


def gl_dimension(lam, d: int) -> int:
    """Dimension of the irreducible GL_d module of highest weight ``lam`` (hook-content formula)."""
    lam = as_partition(lam)
    if len(lam) > d:
        return 0
    lamd = dual(lam)
    num = den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= d + j - i
            den *= (row - j - 1) + (lamd[j] - i - 1) + 1
    return num // den


@dataclass(frozen=True)
class MultiplicityResult:
    value: int
    in_closure: bool
    note: str | None = None


def nearby_cycle_multiplicity(s, rvec, with_flag: bool = False):
    """``K_{dual(s), rvec}``; zero (flagged) when ``s`` is not below ``dual(rvec)``."""
    s, rvec = as_partition(s), as_partition(rvec)
    inside = dominance_leq(s, dual(rvec))  # raises SizeMismatch on size clash
    value = kostka_number(dual(s), rvec) if inside else 0
    if not with_flag:
        return value
    note = None if inside else f"{list(s)} is not dominated by {list(dual(rvec))}; multiplicity 0"
    return MultiplicityResult(value, inside, note)


# symmetric group characters --------------------------------------------------

def _beta_set(lam: Partition, n: int) -> tuple[int, ...]:
    padded = list(lam) + [0] * (n - len(lam))
    return tuple(padded[i] + (n - 1 - i) for i in range(n))


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(beta[i] - (n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def mn_character(lam: Partition, rho: tuple[int, ...]) -> int:
    """chi^lam at cycle type rho by the Murnaghan-Nakayama rule.

    Rim hooks of length k are removed by sliding a bead k places down an
    abacus; the sign counts the beads jumped over.
    """
    if not rho:
        return 1 if lam.size == 0 else 0
    k, rest = rho[0], rho[1:]
    n = len(lam) + k
    beta = _beta_set(lam, n)
    occupied = set(beta)
    total = 0
    for b in beta:
        if b - k < 0 or (b - k) in occupied:
            continue
        height = sum(1 for c in beta if b - k < c < b)
        smaller = _from_beta([c for c in beta if c != b] + [b - k])
        total += (-1) ** height * mn_character(smaller, rest)
    return total


def centralizer_order(rho) -> int:
    counts = Counter(rho)
    return prod(part ** m * factorial(m) for part, m in counts.items())


def _sign_of_type(rho) -> int:
    return (-1) ** sum(part - 1 for part in rho)


def induced_sign_character(rvec, rho) -> Fraction:
    """Value of Ind_{S_rvec}^{S_r}(sgn) at cycle type rho.

    Equals ``z_rho`` times the sum over ways of splitting rho into types of
    the Young factors, of ``prod sgn(nu_i) / z_{nu_i}``.
    """
    rvec = as_partition(rvec)
    rho = tuple(sorted(rho, reverse=True))
    target = Counter(rho)
    total = Fraction(0)
    for nus in product(*(partitions(k) for k in rvec)):
        merged = Counter()
        for nu in nus:
            merged.update(nu)
        if merged != target:
            continue
        total += Fraction(prod(_sign_of_type(nu) for nu in nus), prod(centralizer_order(nu) for nu in nus))
    return total * centralizer_order(rho)


def character_multiplicity(s, rvec, budget: Budget = DEFAULT_BUDGET) -> int:
    """Multiplicity of chi^s in the sign character induced from the Young subgroup S_rvec."""
    s, rvec = as_partition(s), as_partition(rvec)
    if s.size != rvec.size:
        raise SizeMismatch(f"|s|={s.size} but |rvec|={rvec.size}")
    r = s.size
    if r > budget.max_character_size:
        raise BudgetExceeded(
            f"S_{r} exceeds max_character_size={budget.max_character_size}",
            budget="max_character_size", estimate=r,
        )
    inner = Fraction(0)
    for rho in partitions(r):
        induced = induced_sign_character(rvec, rho)
        if induced:
            inner += Fraction(mn_character(s, tuple(rho))) * induced / centralizer_order(rho)
    if inner.denominator != 1:
        raise ArithmeticError(f"non-integral inner product {inner}")
    return int(inner)


def verify_tensor_vs_kostka(d: int, rvec) -> VerificationReport:
    """Tensor-product multiplicities against Kostka numbers, plus a dimension count."""
    rvec = as_partition(rvec)
    table = tensor_minuscule_decompose(d, rvec)
    report = VerificationReport(f"tensor-vs-kostka d={d} rvec={list(rvec)}")
    params = {"d": d, "rvec": list(rvec)}
    # every partition with <= d rows must appear with the Kostka multiplicity, zeros included
    for lam in partitions(rvec.size, max_len=d):
        got = table.entries.get(lam, 0)
        want = kostka_number(dual(lam), rvec)
        report.add(Case(f"mult {list(lam)}", dict(params, partition=list(lam)),
                        want, "DERIVED", got, got == want))
    lhs = table.total_dimension()
    rhs = prod(comb(d, k) for k in rvec)
    report.add(Case("dimension", params, rhs, "DERIVED", lhs, lhs == rhs))
    if rvec:
        # dual(rvec) has rvec[0] <= d rows, so it is always a legal shape
        got = table.entries.get(dual(rvec), 0)
        report.add(Case("open stratum", params, 1, "DERIVED", got, got == 1))
    return report
