from collections import Counter
from itertools import combinations, permutations, product
from math import comb, factorial, prod

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from localmodels.config import Budget
from localmodels.errors import BudgetExceeded, RangeError, SizeMismatch
from localmodels.multiplicities import (
    centralizer_order,
    character_multiplicity,
    gl_dimension,
    induced_sign_character,
    mn_character,
    nearby_cycle_multiplicity,
    tensor_minuscule_decompose,
    verify_tensor_vs_kostka,
)
from localmodels.partitions import Partition, dominance_leq, dual, partitions


def P(*parts):
    return Partition(parts)


# oracles -----------------------------------------------------------------------

def hook_length_count(lam):
    lam = list(lam)
    n = sum(lam)
    conj = list(dual(Partition(lam)))
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


def cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def perm_sign(perm):
    return (-1) ** sum(k - 1 for k in cycle_type(perm))


def brute_induced_sign(rvec, rho):
    """(1/|H|) sum over x in S_r of sgn(x g x^-1) when x g x^-1 preserves every Young block."""
    r = sum(rvec)
    blocks, start = [], 0
    for part in rvec:
        blocks.append(set(range(start, start + part)))
        start += part
    block_of = {i: k for k, b in enumerate(blocks) for i in b}
    g, start = list(range(r)), 0
    for part in rho:
        for i in range(part):
            g[start + i] = start + (i + 1) % part
        start += part
    total = 0
    for x in permutations(range(r)):
        inv = [0] * r
        for i, xi in enumerate(x):
            inv[xi] = i
        h = [x[g[inv[i]]] for i in range(r)]
        if all(block_of[h[i]] == block_of[i] for i in range(r)):
            total += perm_sign(h)
    return sympy.Rational(total, prod(factorial(k) for k in rvec))


def ssyt_weights(lam, d):
    """Multiset of contents of semistandard tableaux of shape lam with entries 1..d."""
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    out = Counter()

    def fill(k, grid):
        if k == len(cells):
            w = [0] * d
            for v in grid.values():
                w[v - 1] += 1
            out[tuple(w)] += 1
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[(i, j - 1)])
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, d + 1):
            grid[(i, j)] = v
            fill(k + 1, grid)
            del grid[(i, j)]

    fill(0, {})
    return out


def peel_tensor_product(d, rvec):
    """Decompose a weight multiset by repeatedly removing the character of its highest weight."""
    weights = Counter({(): 1})
    for k in rvec:
        step = Counter()
        for w, m in weights.items():
            base = list(w) if w else [0] * d
            for S in combinations(range(d), k):
                v = list(base)
                for i in S:
                    v[i] += 1
                step[tuple(v)] += m
        weights = step
    result = {}
    while weights:
        top = max((w for w in weights if list(w) == sorted(w, reverse=True)))
        m = weights[top]
        lam = Partition(top)
        result[lam] = m
        for w, c in ssyt_weights(list(lam), d).items():
            weights[w] -= m * c
            if weights[w] == 0:
                del weights[w]
        assert all(v > 0 for v in weights.values())
    return result


# tensor products ---------------------------------------------------------------

def test_tensor_examples():
    assert tensor_minuscule_decompose(2, (1, 1)).entries == {P(2): 1, P(1, 1): 1}
    assert tensor_minuscule_decompose(4, (3,)).entries == {P(1, 1, 1): 1}
    assert tensor_minuscule_decompose(1, (1, 1, 1)).entries == {P(3): 1}
    assert tensor_minuscule_decompose(2, (2, 1)).entries == {P(2, 1): 1}
    with pytest.raises(RangeError):
        tensor_minuscule_decompose(2, (3,))


def test_table_order_and_serialization():
    table = tensor_minuscule_decompose(3, (1, 1, 1))
    keys = [lam for lam, _ in table.sorted_items()]
    assert keys == [P(3), P(2, 1), P(1, 1, 1)]
    assert [v for _, v in table.sorted_items()] == [1, 2, 1]
    data = table.to_dict()
    assert data["entries"][1] == {"partition": [2, 1], "multiplicity": 2}


TENSOR_CASES = [(d, rvec) for d in range(1, 5) for e in range(1, 4)
                for rvec in product(range(1, d + 1), repeat=e) if list(rvec) == sorted(rvec, reverse=True)]


@pytest.mark.parametrize("d,rvec", TENSOR_CASES)
def test_tensor_matches_weight_peeling(d, rvec):
    table = tensor_minuscule_decompose(d, rvec)
    assert table.entries == peel_tensor_product(d, rvec)
    assert table.total_dimension() == prod(comb(d, k) for k in rvec)
    assert table.entries[dual(Partition(rvec))] == 1
    assert all(len(lam) <= d and m > 0 for lam, m in table.entries.items())


@pytest.mark.parametrize("d,rvec", TENSOR_CASES)
def test_verify_tensor_vs_kostka_passes(d, rvec):
    report = verify_tensor_vs_kostka(d, rvec)
    assert report.passed, report.summary_lines()


def test_gl_dimension():
    assert gl_dimension(P(1), 4) == 4
    assert gl_dimension(P(1, 1), 4) == 6
    assert gl_dimension(P(2), 3) == 6
    assert gl_dimension(P(2, 1), 3) == 8
    assert gl_dimension(P(1, 1, 1), 2) == 0
    for d in range(1, 4):
        for n in range(1, 5):
            for lam in partitions(n, max_len=d):
                assert gl_dimension(lam, d) == sum(ssyt_weights(list(lam), d).values())


# Kostka multiplicities -----------------------------------------------------------

def test_nearby_cycle_examples():
    for rvec in partitions(5):
        assert nearby_cycle_multiplicity(dual(rvec), rvec) == 1
    assert nearby_cycle_multiplicity(P(1, 1), P(1, 1)) == 1
    assert nearby_cycle_multiplicity(P(2), P(1, 1)) == 1
    assert nearby_cycle_multiplicity(P(1, 1, 1), P(2, 1)) == 1
    res = nearby_cycle_multiplicity(P(3), P(2, 1), with_flag=True)
    assert res.value == 0 and not res.in_closure and res.note
    with pytest.raises(SizeMismatch):
        nearby_cycle_multiplicity(P(2), P(2, 1))


@pytest.mark.parametrize("r", range(1, 9))
def test_positive_exactly_on_closure(r):
    for rvec in partitions(r):
        t = dual(rvec)
        for s in partitions(r):
            assert (nearby_cycle_multiplicity(s, rvec) >= 1) == dominance_leq(s, t)


# characters --------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 8))
def test_mn_character_degrees_and_orthogonality(n):
    parts = list(partitions(n))
    ident = tuple([1] * n)
    for lam in parts:
        assert mn_character(lam, ident) == hook_length_count(lam)
        assert mn_character(lam, (n,)) in (-1, 0, 1)
    order = factorial(n)
    for a in parts:
        for b in parts:
            inner = sum(sympy.Rational(mn_character(a, tuple(rho)) * mn_character(b, tuple(rho)),
                                       centralizer_order(rho)) for rho in parts)
            assert inner == (1 if a == b else 0)
    assert sum(order // centralizer_order(rho) for rho in parts) == order


def test_mn_character_small_table():
    # S_3: rows (3), (2,1), (1,1,1); columns (1,1,1), (2,1), (3)
    table = [[mn_character(lam, rho) for rho in ((1, 1, 1), (2, 1), (3,))]
             for lam in (P(3), P(2, 1), P(1, 1, 1))]
    assert table == [[1, 1, 1], [2, 0, -1], [1, -1, 1]]


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_induced_sign_matches_brute_force(r):
    for rvec in partitions(r):
        for rho in partitions(r):
            assert induced_sign_character(rvec, rho) == brute_induced_sign(tuple(rvec), tuple(rho))


def test_character_multiplicity_examples():
    for r in range(1, 7):
        for s in partitions(r):
            assert character_multiplicity(s, [1] * r) == hook_length_count(s)
        assert character_multiplicity([1] * r, [r]) == 1
    with pytest.raises(SizeMismatch):
        character_multiplicity(P(2), P(1))
    with pytest.raises(BudgetExceeded):
        character_multiplicity(P(9), P(9))
    with pytest.raises(BudgetExceeded):
        character_multiplicity(P(3), P(3), Budget(max_character_size=2))


@pytest.mark.parametrize("r", range(1, 7))
def test_character_multiplicity_equals_kostka(r):
    for rvec in partitions(r):
        for s in partitions(r):
            assert character_multiplicity(s, rvec) == nearby_cycle_multiplicity(s, rvec)


@settings(max_examples=30, deadline=None)
@given(st.integers(7, 8).flatmap(lambda n: st.tuples(
    st.sampled_from(list(partitions(n))), st.sampled_from(list(partitions(n))))))
def test_character_multiplicity_equals_kostka_sampled(pair):
    s, rvec = pair
    assert character_multiplicity(s, rvec) == nearby_cycle_multiplicity(s, rvec)
