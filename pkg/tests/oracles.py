"""Independent brute-force oracles used only by the test suite.

The character oracle expands power sums into the monomial basis of
symmetric polynomials in d variables and solves the unitriangular Kostka
change of basis, avoiding the recursion the package itself uses.  The
other oracles are exact Fraction-arithmetic expansions of classical
closed products.
"""

from __future__ import annotations

import math
from fractions import Fraction

from orbivertex.partitions import check_partition, partitions_of


def _exponent_partition(vec) -> tuple:
    return tuple(sorted((e for e in vec if e), reverse=True))


def powersum_monomial_coeffs(mu, d: int) -> dict:
    """Coefficients of p_mu on the monomial basis, in d variables.

    The coefficient of m_lambda is read off the sorted-descending
    exponent vector, which represents its orbit exactly once.
    """
    mu = check_partition(mu)
    terms = {(0,) * d: 1}
    for k in mu:
        new = {}
        for vec, c in terms.items():
            for i in range(d):
                lifted = list(vec)
                lifted[i] += k
                key = tuple(lifted)
                new[key] = new.get(key, 0) + c
        terms = new
    coeffs = {}
    for vec, c in terms.items():
        if list(vec) == sorted(vec, reverse=True):
            coeffs[_exponent_partition(vec)] = c
    return coeffs


def kostka_number(nu, lam) -> int:
    """Count semistandard tableaux of shape nu and content lam by direct
    row-by-row backtracking (weakly increasing rows, strict columns)."""
    nu = check_partition(nu)
    lam = tuple(lam)
    if sum(nu) != sum(lam):
        return 0
    rows = len(nu)

    def rec(row_idx, remaining, prev_row):
        if row_idx == rows:
            return 1 if not any(remaining) else 0
        width = nu[row_idx]
        count = 0

        def build(col, row_acc, rem):
            nonlocal count
            if col == width:
                count += rec(row_idx + 1, tuple(rem), row_acc)
                return
            lo = row_acc[col - 1] if col else 1
            if prev_row is not None:
                lo = max(lo, prev_row[col] + 1)
            for v in range(lo, len(rem) + 1):
                if rem[v - 1] == 0:
                    continue
                rem2 = list(rem)
                rem2[v - 1] -= 1
                build(col + 1, row_acc + (v,), rem2)

        build(0, (), list(remaining))
        return count

    return rec(0, lam, None)


def chi_oracle(nu, mu) -> int:
    """Character value solved from p_mu = sum_nu chi_nu(mu) s_nu.

    The Kostka matrix is unitriangular with respect to any order
    extending dominance, and descending lex order extends dominance, so
    back-substitution in that order is exact integer arithmetic.
    """
    nu = check_partition(nu)
    mu = check_partition(mu)
    d = sum(mu)
    if sum(nu) != d:
        raise ValueError("shape and class must have equal size")
    p_coeffs = powersum_monomial_coeffs(mu, d)
    order = sorted(partitions_of(d), reverse=True)
    solved = {}
    for shape in order:
        val = p_coeffs.get(shape, 0)
        for prev in order:
            if prev == shape:
                break
            val -= solved[prev] * kostka_number(prev, shape)
        solved[shape] = val
    return solved[nu]


def taylor_inverse_sin_ratio(order: int) -> list:
    """Coefficients of (y/2) / sin(y/2) through y^order, exact division."""
    n = order + 2
    ratio = [Fraction(0)] * (n + 1)
    for k in range(0, n + 1, 2):
        m = k // 2
        ratio[k] = Fraction((-1) ** m, math.factorial(2 * m + 1) * 4**m)
    inv = [Fraction(0)] * (n + 1)
    inv[0] = Fraction(1)
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += ratio[j] * inv[k - j]
        inv[k] = -acc
    return inv[: order + 1]


def plane_partition_counts(max_total: int) -> list:
    """Plane partition counts from the classical product formula
    prod_k (1 - q^k)^(-k), expanded with exact integer arithmetic."""
    coeffs = [0] * (max_total + 1)
    coeffs[0] = 1
    for k in range(1, max_total + 1):
        for _ in range(k):
            # Multiply by 1/(1 - q^k): running prefix sums with stride k.
            for n in range(k, max_total + 1):
                coeffs[n] += coeffs[n - k]
    return coeffs


__all__ = [
    "chi_oracle",
    "kostka_number",
    "powersum_monomial_coeffs",
    "plane_partition_counts",
    "taylor_inverse_sin_ratio",
]
