"""Shared fixtures and independent brute-force oracles.

The oracles below deliberately avoid the library's facet and scan code:
membership in conv(V) is decided by Caratheodory (some affinely independent
subset of V has nonnegative barycentric coordinates), with a small Fraction
solver written here.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import pytest

ACCEPTANCE_LINES: list[str] = []

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
TRIANGLE = [(0, 0), (1, 0), (1, 1)]
STD_TRIANGLE = [(0, 0), (1, 0), (0, 1)]
SEGMENT01 = [(0,), (1,)]
SEGMENT02 = [(0,), (2,)]
CUBE = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
CHENGYANG2 = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1)]


def _solve(mat, rhs):
    """Unique solution of a square or overdetermined consistent system, else None."""
    rows = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(mat, rhs)]
    ncols = len(mat[0])
    piv_row = 0
    pivots = []
    for c in range(ncols):
        p = next((r for r in range(piv_row, len(rows)) if rows[r][c] != 0), None)
        if p is None:
            return None
        rows[piv_row], rows[p] = rows[p], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [x / pv for x in rows[piv_row]]
        for r in range(len(rows)):
            if r != piv_row and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(rows[r][-1] != 0 for r in range(piv_row, len(rows))):
        return None
    return [rows[i][-1] for i in range(ncols)]


@lru_cache(maxsize=None)
def _simplices(verts):
    d = len(verts[0])
    out = []
    for k in range(1, d + 2):
        for S in combinations(verts, k):
            mat = [[v[i] - S[0][i] for v in S[1:]] for i in range(d)]
            if _rank(mat) == k - 1:
                out.append(S)
    return out


def _rank(mat):
    rows = [[Fraction(x) for x in r] for r in mat]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((r for r in range(rk, len(rows)) if rows[r][c] != 0), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        for r in range(len(rows)):
            if r != rk and rows[r][c] != 0:
                f = rows[r][c] / rows[rk][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        rk += 1
    return rk


def in_hull(x, verts, n=1, strict=False):
    """x in n*conv(verts) (strict: in the interior, verts full-dimensional)."""
    verts = tuple(tuple(v) for v in verts)
    d = len(verts[0])
    if strict:
        # interior iff x +- eps e_i stays inside for a small eps, for all i
        eps = Fraction(1, 10 ** 6)
        for i in range(d):
            for s in (1, -1):
                y = list(x)
                y[i] = y[i] + s * eps * n
                if not in_hull(y, verts, n):
                    return False
        return in_hull(x, verts, n) and n > 0
    if n == 0:
        return all(c == 0 for c in x)
    for S in _simplices(verts):
        k = len(S)
        mat = [[v[i] for v in S] for i in range(d)] + [[1] * k]
        lam = _solve(mat, list(x) + [n])
        if lam is not None and all(l >= 0 for l in lam):
            return True
    return False


def oracle_points(verts, n, strict=False):
    d = len(verts[0])
    lo = [min(v[i] for v in verts) * n for i in range(d)]
    hi = [max(v[i] for v in verts) * n for i in range(d)]
    pts = []
    for x in product(*(range(int(a), int(b) + 1) for a, b in zip(lo, hi))):
        if in_hull(x, verts, n, strict):
            pts.append(x)
    return pts


def oracle_count(verts, n, strict=False):
    return len(oracle_points(verts, n, strict))


@pytest.fixture(scope="session")
def polys():
    from ehrlift.polytope import standard_polytopes

    return standard_polytopes()


@pytest.fixture(scope="session")
def ex0():
    from ehrlift.weights import LinearForm

    return {"w1": LinearForm([1, 1]), "w2": LinearForm([2, 3]), "w3": LinearForm([1, 0])}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
