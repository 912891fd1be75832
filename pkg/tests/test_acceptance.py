"""Acceptance criteria, one test each, timed against their stated wall-clock limits.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and by ``python3 tests/test_acceptance.py``.
"""
import subprocess
import sys
import time
from itertools import combinations_with_replacement, product

import pytest

from localmodels.lattice_model import PiModule, stratify
from localmodels.matrix_schemes import (
    GenericMatrix,
    char_poly_ideal,
    diagonal_coinvariant_ideal,
    e2_ideal,
    s_block_ideal,
)
from localmodels.multiplicities import character_multiplicity, nearby_cycle_multiplicity, verify_tensor_vs_kostka
from localmodels.orbits import FqMatrix, PartialFlagSpec, jordan_matrix, jordan_type_of, springer_fiber_count
from localmodels.partitions import (
    Partition,
    affine_orbit_dim,
    dominance_leq,
    dual,
    enumerate_strata,
    nilpotent_orbit_dim,
    partitions,
    s_max,
    special_fiber_dim,
)
from localmodels.polyring import GF, QQ

RESULTS = []


def record(number, title, ok, elapsed, limit, detail=""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f"{elapsed:.2f}s" + (f" < {limit}s" if limit is not None else "")
    line = f"{status}  criterion {number:>2}  {title}  [{budget}]"
    if detail:
        line += f"  {detail}"
    RESULTS.append(line)
    return ok and within


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


# 1 -------------------------------------------------------------------------------

COINVARIANT_CASES = [(2, 2, 2), (3, 2, 3), (4, 2, 6), (2, 3, 2), (3, 3, 6), (4, 3, 12)]


@pytest.mark.parametrize("field", [QQ, GF(503)], ids=["QQ", "GF503"])
@pytest.mark.parametrize("r,e,expected", COINVARIANT_CASES)
def test_criterion_01_coinvariant_dimension(r, e, expected, field):
    dim, elapsed = timed(lambda: diagonal_coinvariant_ideal(r, e, field).quotient_dimension())
    assert record(1, f"coinvariant dimension r={r} e={e} {field.name}", dim == expected, elapsed, 60,
                  f"computed {dim}, expected {expected}")


# 2 -------------------------------------------------------------------------------

@pytest.mark.parametrize("r", [2, 3])
def test_criterion_02_s_blocks_generate_char_poly_ideal(r):
    same, elapsed = timed(lambda: s_block_ideal(r, QQ).equals(char_poly_ideal(r, QQ)))
    assert record(2, f"S^t_h (t+h=r+1) ideal equals (sigma_1..sigma_r), r={r}", same, elapsed, 30)


# 3 -------------------------------------------------------------------------------

@pytest.mark.parametrize("r", [2, 3])
def test_criterion_03_cayley_hamilton_membership(r):
    def check():
        I = char_poly_ideal(r, QQ)
        return [p for p in (GenericMatrix(r) ** r).entries() if not I.contains_polynomial(p)]

    outside, elapsed = timed(check)
    assert record(3, f"entries of A^r lie in (sigma_1..sigma_r), r={r}", not outside, elapsed, 30,
                  f"{len(outside)} outside")


# 4 -------------------------------------------------------------------------------

def test_criterion_04_multiplicity_identity():
    def check():
        mismatches, pairs = [], 0
        for r in range(1, 7):
            for rvec in partitions(r):
                for s in partitions(r):
                    pairs += 1
                    if nearby_cycle_multiplicity(s, rvec) != character_multiplicity(s, rvec):
                        mismatches.append((s, rvec))
        failed_tables, tables = [], 0
        for d in range(1, 5):
            for e in range(1, 4):
                for combo in combinations_with_replacement(range(1, d + 1), e):
                    tables += 1
                    rvec = sorted(combo, reverse=True)
                    if not verify_tensor_vs_kostka(d, rvec).passed:
                        failed_tables.append((d, rvec))
        return mismatches, pairs, failed_tables, tables

    (mismatches, pairs, failed_tables, tables), elapsed = timed(check)
    ok = not mismatches and not failed_tables
    assert record(4, "Kostka = character multiplicity (r<=6) and tensor tables (d<=4, e<=3)", ok, elapsed, 60,
                  f"{pairs} pairs, {len(mismatches)} mismatches; {tables} tables, {len(failed_tables)} failed")


# 5 -------------------------------------------------------------------------------

def test_criterion_05_dimension_identities():
    def check():
        checked = bad_orbit = bad_smax = 0
        for d in range(1, 7):
            for e in range(1, 6):
                for r in range(0, min(10, e * d) + 1):
                    if affine_orbit_dim(s_max(r, e), d) != special_fiber_dim(r, e, d):
                        bad_smax += 1
                    for s in enumerate_strata(r, e, d):
                        checked += 1
                        if affine_orbit_dim(s, d) + r * r - r * d != nilpotent_orbit_dim(s):
                            bad_orbit += 1
        return checked, bad_orbit, bad_smax

    (checked, bad_orbit, bad_smax), elapsed = timed(check)
    ok = bad_orbit == 0 and bad_smax == 0 and checked > 0
    assert record(5, "orbit dimension identity and special fibre = <s_max, 2rho>", ok, elapsed, 10,
                  f"{checked} strata, {bad_orbit + bad_smax} failures")


# 6 -------------------------------------------------------------------------------

@pytest.mark.parametrize("e", [3, 4])
@pytest.mark.parametrize("p", [2, 3])
def test_criterion_06_inhomogeneous_counterexample(e, p):
    counts, elapsed = timed(lambda: stratify(PiModule((e, 1), GF(p)), e))
    expected = {Partition([e]): p, Partition([e - 1, 1]): 1}
    ok = counts == expected and sum(counts.values()) == p + 1
    assert record(6, f"k[P]/P^{e} + k[P]/P over GF({p}), r={e}: p+1 points", ok, elapsed, 30,
                  "strata " + ", ".join(f"{list(k)}:{v}" for k, v in counts.items()))


# 7 -------------------------------------------------------------------------------

@pytest.mark.parametrize("r,e,d", [(2, 2, 2), (3, 2, 2), (2, 2, 3)])
def test_criterion_07_homogeneous_stratification(r, e, d):
    counts, elapsed = timed(lambda: stratify(PiModule.homogeneous(e, d, GF(2)), r))
    strata = enumerate_strata(r, e, d)
    keys_ok = set(counts) == set(strata)
    min_ok = strata.minimum() in counts
    maximal = [s for s in counts if all(dominance_leq(t, s) for t in counts)]
    top_ok = len(maximal) == 1 and all(counts[maximal[0]] > c for s, c in counts.items() if s != maximal[0])
    assert record(7, f"homogeneous strata r={r} e={e} d={d} GF(2)", keys_ok and min_ok and top_ok, elapsed, 120,
                  "strata " + ", ".join(f"{list(k)}:{v}" for k, v in counts.items()))


# 8 -------------------------------------------------------------------------------

def test_criterion_08_springer_nonemptiness():
    def check():
        wrong, pairs = [], 0
        for r in range(1, 5):
            for s in partitions(r):
                A = jordan_matrix(s, GF(2))
                for rvec in partitions(r):
                    pairs += 1
                    nonempty = springer_fiber_count(A, PartialFlagSpec(rvec)).count > 0
                    if nonempty != dominance_leq(s, dual(rvec)):
                        wrong.append((s, rvec))
        return wrong, pairs

    (wrong, pairs), elapsed = timed(check)
    assert record(8, "Springer fibre nonempty iff s <= dual(rvec), r<=4 GF(2)", not wrong, elapsed, 120,
                  f"{pairs} pairs, {len(wrong)} wrong")


# 9 -------------------------------------------------------------------------------

def test_criterion_09_e2_points():
    def check():
        F = GF(2)
        gens = list(e2_ideal(2, 1, F).generators)
        solutions = violations = expected = 0
        for flat in product(range(2), repeat=9):
            M = FqMatrix([flat[0:3], flat[3:6], flat[6:9]], F)
            square_zero = M.power(2).is_zero()
            if square_zero and dominance_leq(jordan_type_of(M), Partition([2, 1])):
                expected += 1
            if all(not g.evaluate(flat) for g in gens):
                solutions += 1
                if not square_zero or M.rank() > 1:
                    violations += 1
        return solutions, violations, expected

    (solutions, violations, expected), elapsed = timed(check)
    ok = violations == 0 and solutions == expected
    assert record(9, "3x3 GF(2) points of the e2 ideal are the square-zero rank<=1 matrices", ok, elapsed, 10,
                  f"{solutions} solutions, {expected} expected, {violations} violations")


# 10 ------------------------------------------------------------------------------

def test_criterion_10_determinism():
    def once():
        proc = subprocess.run([sys.executable, "-m", "localmodels", "verify-all", "--quick", "--json"],
                              capture_output=True)
        return proc.returncode, proc.stdout

    def check():
        return once(), once()

    ((code1, out1), (code2, out2)), elapsed = timed(check)
    ok = code1 == code2 == 0 and out1 == out2 and len(out1) > 0
    assert record(10, "verify-all --quick --json is byte-identical across runs", ok, elapsed, None,
                  f"{len(out1)} bytes, exit codes {code1}/{code2}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
