"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: determinants are
cofactor expansions, linear solving is rational Gaussian elimination, and
kernel searches are bounded brute force.
"""

from fractions import Fraction
from itertools import product

import pytest


def cofactor_det(rows):
    """Determinant by cofactor expansion (small matrices only)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def solve_rational(columns, target):
    """Solve sum_i c_i * columns[i] = target over Q; None if inconsistent.

    Assumes the columns are linearly independent, so the solution is unique
    when it exists.
    """
    if not columns:
        return [] if not any(target) else None
    rows = len(columns[0])
    aug = [[Fraction(col[i]) for col in columns] + [Fraction(target[i])]
           for i in range(rows)]
    ncols = len(columns)
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        hit = None
        for r in range(pivot_row, rows):
            if aug[r][col] != 0:
                hit = r
                break
        if hit is None:
            continue
        aug[pivot_row], aug[hit] = aug[hit], aug[pivot_row]
        pv = aug[pivot_row][col]
        aug[pivot_row] = [x / pv for x in aug[pivot_row]]
        for r in range(rows):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    if len(pivots) < ncols:
        return None  # columns not independent; caller should not rely on this
    for r in range(pivot_row, rows):
        if aug[r][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][-1]
    return sol


def in_lattice(basis, vector):
    """vector is an integer combination of the (independent) basis vectors."""
    if not basis:
        return not any(vector)
    sol = solve_rational(basis, vector)
    return sol is not None and all(c.denominator == 1 for c in sol)


def group_combination(family, alphas):
    """sum alpha_i * g_i using the library's group arithmetic."""
    total = family[0].group.zero()
    for a, g in zip(alphas, family):
        total = total + a * g
    return total


def brute_kernel_vectors(family, bound):
    """All alpha in [-bound, bound]^m with sum alpha_i g_i = 0 (including 0)."""
    m = len(family)
    out = []
    for alphas in product(range(-bound, bound + 1), repeat=m):
        if group_combination(family, alphas).is_zero():
            out.append(alphas)
    return out


def brute_nonneg_kernel_exists(family, bound):
    m = len(family)
    for alphas in product(range(bound + 1), repeat=m):
        if any(alphas) and group_combination(family, alphas).is_zero():
            return True
    return False


@pytest.fixture
def oracles():
    return {
        "cofactor_det": cofactor_det,
        "in_lattice": in_lattice,
        "brute_kernel_vectors": brute_kernel_vectors,
        "brute_nonneg_kernel_exists": brute_nonneg_kernel_exists,
    }
