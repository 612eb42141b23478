# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice scan; same contract as ``_scan_py`` but on int64.

The Python wrapper in ``kernels/__init__.py`` checks magnitudes before calling
in here, so the arithmetic below cannot overflow.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i64 ceildiv(i64 a, i64 b) nogil:
    return -floordiv(-a, b)


cdef int bounds(i64* coef, i64* offs, i64* nrows, int k, i64* y,
                i64* lo_out, i64* hi_out) nogil:
    cdef i64 base = offs[k]
    cdef int width = k + 2
    cdef int i, j
    cdef i64 r, a, b
    cdef int have_lo = 0, have_hi = 0
    cdef i64 lo = 0, hi = 0
    for i in range(nrows[k]):
        r = coef[base + i * width + width - 1]
        for j in range(k):
            r -= coef[base + i * width + j] * y[j]
        a = coef[base + i * width + k]
        if a > 0:
            b = floordiv(r, a)
            if not have_hi or b < hi:
                hi = b
                have_hi = 1
        elif a < 0:
            b = ceildiv(r, a)
            if not have_lo or b > lo:
                lo = b
                have_lo = 1
        elif r < 0:
            lo_out[0] = 1
            hi_out[0] = 0
            return 0
    if not (have_lo and have_hi):
        return -1
    lo_out[0] = lo
    hi_out[0] = hi
    return 0


cdef class _Packed:
    cdef i64* coef
    cdef i64* offs
    cdef i64* nrows
    cdef int d

    def __cinit__(self, levels):
        cdef int k, i, j, pos, total = 0
        self.d = len(levels)
        for k in range(self.d):
            total += len(levels[k]) * (k + 2)
        self.coef = <i64*> malloc(max(total, 1) * sizeof(i64))
        self.offs = <i64*> malloc(max(self.d, 1) * sizeof(i64))
        self.nrows = <i64*> malloc(max(self.d, 1) * sizeof(i64))
        if not self.coef or not self.offs or not self.nrows:
            raise MemoryError()
        pos = 0
        for k in range(self.d):
            self.offs[k] = pos
            self.nrows[k] = len(levels[k])
            for row in levels[k]:
                for j in range(k + 2):
                    self.coef[pos] = row[j]
                    pos += 1

    def __dealloc__(self):
        free(self.coef)
        free(self.offs)
        free(self.nrows)


def scan(levels):
    cdef _Packed pk = _Packed(levels)
    cdef int d = pk.d
    if d == 0:
        return [()]
    cdef i64* y = <i64*> malloc(d * sizeof(i64))
    cdef i64* hi_at = <i64*> malloc(d * sizeof(i64))
    cdef i64 lo, hi
    cdef int k = 0, j
    out = []
    try:
        if bounds(pk.coef, pk.offs, pk.nrows, 0, y, &lo, &hi) < 0:
            raise ValueError("scan region is unbounded")
        hi_at[0] = hi
        y[0] = lo - 1
        while k >= 0:
            y[k] += 1
            if y[k] > hi_at[k]:
                k -= 1
                continue
            if k == d - 1:
                out.append(tuple([y[j] for j in range(d)]))
                continue
            k += 1
            if bounds(pk.coef, pk.offs, pk.nrows, k, y, &lo, &hi) < 0:
                raise ValueError("scan region is unbounded")
            hi_at[k] = hi
            y[k] = lo - 1
    finally:
        free(y)
        free(hi_at)
    return out


def scan_count(levels):
    cdef _Packed pk = _Packed(levels)
    cdef int d = pk.d
    if d == 0:
        return 1
    cdef i64* y = <i64*> malloc(d * sizeof(i64))
    cdef i64* hi_at = <i64*> malloc(d * sizeof(i64))
    cdef i64 lo, hi
    cdef int k = 0, last = d - 1, status = 0
    cdef i64 total = 0
    try:
        if bounds(pk.coef, pk.offs, pk.nrows, 0, y, &lo, &hi) < 0:
            raise ValueError("scan region is unbounded")
        if d == 1:
            return max(0, hi - lo + 1)
        with nogil:
            hi_at[0] = hi
            y[0] = lo - 1
            while k >= 0:
                y[k] += 1
                if y[k] > hi_at[k]:
                    k -= 1
                    continue
                if k == last - 1:
                    if bounds(pk.coef, pk.offs, pk.nrows, last, y, &lo, &hi) < 0:
                        status = -1
                        break
                    if hi >= lo:
                        total += hi - lo + 1
                    continue
                k += 1
                if bounds(pk.coef, pk.offs, pk.nrows, k, y, &lo, &hi) < 0:
                    status = -1
                    break
                hi_at[k] = hi
                y[k] = lo - 1
        if status < 0:
            raise ValueError("scan region is unbounded")
    finally:
        free(y)
        free(hi_at)
    return total
