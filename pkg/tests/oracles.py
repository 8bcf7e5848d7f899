"""Independent oracles used across the test suite.

These deliberately avoid the library's code paths: determinants by cofactor
expansion, kernels by rational Gaussian elimination, multiplicative counts
straight from definitions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def cofactor_det(m) -> int:
    """Determinant by recursive cofactor expansion (exact, small matrices only)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total += -term if j % 2 else term
    return total


def rational_kernel(rows, n):
    """Basis of the rational kernel of the row map, by Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        mat[r] = [x / mat[r][c] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -mat[i][f]
        basis.append(vec)
    return basis


def proportional_positive(u, v) -> bool:
    """Whether u = q v for some rational q > 0 (u, v nonzero)."""
    ratio = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return False
        if b != 0:
            q = Fraction(a) / Fraction(b)
            if ratio is None:
                ratio = q
            elif q != ratio:
                return False
    return ratio is not None and ratio > 0


def totient(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def count_square_roots(a: int, p: int) -> int:
    """Number of solutions of x^2 = a over Z/p, by direct enumeration."""
    a %= p
    return sum(1 for x in range(p) if (x * x - a) % p == 0)
