"""Pure-Python lattice scan, the reference implementation of the kernel.

The input is a list of levels.  Level k (0-based) is a list of integer rows
``(a_0, ..., a_k, rhs)`` meaning ``a_0*y_0 + ... + a_k*y_k <= rhs``; together
the rows of level k describe the projection of the region onto its first k+1
coordinates.  The scan walks y_0, y_1, ... in increasing order, so the output
is lexicographically sorted.
"""


def _bounds(rows, k, y):
    lo = None
    hi = None
    for row in rows:
        r = row[-1]
        for j in range(k):
            r -= row[j] * y[j]
        a = row[k]
        if a > 0:
            b = r // a
            if hi is None or b < hi:
                hi = b
        elif a < 0:
            b = -((-r) // a)  # ceil(r / a)
            if lo is None or b > lo:
                lo = b
        elif r < 0:
            return 1, 0
    if lo is None or hi is None:
        raise ValueError("scan region is unbounded")
    return lo, hi


def scan(levels):
    d = len(levels)
    if d == 0:
        return [()]
    out = []
    y = [0] * d
    hi_at = [0] * d
    k = 0
    lo, hi_at[0] = _bounds(levels[0], 0, y)
    y[0] = lo - 1
    while k >= 0:
        y[k] += 1
        if y[k] > hi_at[k]:
            k -= 1
            continue
        if k == d - 1:
            out.append(tuple(y))
            continue
        k += 1
        lo, hi_at[k] = _bounds(levels[k], k, y)
        y[k] = lo - 1
    return out


def scan_count(levels):
    d = len(levels)
    if d == 0:
        return 1
    last = d - 1
    if d == 1:
        lo, hi = _bounds(levels[0], 0, [])
        return max(0, hi - lo + 1)
    total = 0
    y = [0] * d
    hi_at = [0] * d
    k = 0
    lo, hi_at[0] = _bounds(levels[0], 0, y)
    y[0] = lo - 1
    while k >= 0:
        y[k] += 1
        if y[k] > hi_at[k]:
            k -= 1
            continue
        if k == last - 1:
            # the innermost coordinate is an interval: count it without walking
            lo, hi = _bounds(levels[last], last, y)
            if hi >= lo:
                total += hi - lo + 1
            continue
        k += 1
        lo, hi_at[k] = _bounds(levels[k], k, y)
        y[k] = lo - 1
    return total
