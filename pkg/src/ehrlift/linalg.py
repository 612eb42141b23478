"""Small exact linear algebra over the rationals.

Everything here works on lists of Python ints / Fractions and is meant for the
tiny matrices (dimension <= 7 or so) that show up in desk-scale polytope work.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InputError

Number = int | Fraction


def as_rat(x) -> Number:
    """Coerce to int when integral, Fraction otherwise ("p/q" strings allowed)."""
    if isinstance(x, bool):
        raise InputError("booleans are not numbers here")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            x = Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {x!r}") from None
    if isinstance(x, float):
        if not x.is_integer():
            raise InputError(f"refusing inexact float {x!r}")
        return int(x)
    try:
        x = Fraction(x)
    except TypeError:
        raise InputError(f"not a rational number: {x!r}") from None
    return x.numerator if x.denominator == 1 else x


def norm(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def rref(rows: Sequence[Sequence[Number]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(rref(rows)[1])


def det(mat: Sequence[Sequence[Number]]) -> Number:
    """Determinant by fraction-free Bareiss elimination (exact for ints)."""
    n = len(mat)
    if n == 0:
        return 1
    if all(isinstance(v, int) for row in mat for v in row):
        a = [list(row) for row in mat]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            akk = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            prev = akk
        return sign * a[n - 1][n - 1]
    a = [[Fraction(v) for v in row] for row in mat]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        result *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return norm(result)


def solve(mat: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> list[Number] | None:
    """Solve mat @ x = rhs for a consistent system of full column rank.

    Returns None if the system is inconsistent. Raises ValueError when the
    solution is not unique.
    """
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    ncols = len(mat[0]) if mat else 0
    red, piv = rref(aug)
    if ncols in piv:
        return None
    if len(piv) < ncols:
        raise ValueError("solution is not unique")
    x: list[Number] = [0] * ncols
    for row, c in zip(red, piv):
        x[c] = norm(row[-1])
    return x


def nullspace(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis


def primitive(vec: Sequence[Number]) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    fr = [Fraction(v) for v in vec]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def cofactor_normal(diffs: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Normal vector of the hyperplane spanned by k-1 vectors in Z^k.

    Generalized cross product: component j is (-1)^j times the minor obtained
    by deleting column j.
    """
    k = len(diffs) + 1
    out = []
    for j in range(k):
        minor = [[r[c] for c in range(k) if c != j] for r in diffs]
        d = det(minor)
        out.append(d if j % 2 == 0 else -d)
    return tuple(out)


def integer_scale(points: Sequence[Sequence[Number]]) -> tuple[list[list[int]], int]:
    """Common denominator L and the integer points L*p."""
    den = 1
    for p in points:
        for v in p:
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
    return [[int(v * den) for v in p] for p in points], den
