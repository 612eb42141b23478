"""Backend selection for the lattice-scan kernel.

The compiled extension is used when it was built and imports cleanly; the
pure-Python module is the fallback.  Setting ``EHRLIFT_PURE_PYTHON=1`` forces
the fallback (handy for comparing the two).
"""

import os

from . import _scan_py

_compiled = None
if os.environ.get("EHRLIFT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _scan as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
COMPILED_AVAILABLE = _compiled is not None

# keep every intermediate well inside int64
_LIMIT = 1 << 62


def _fits(levels, radius):
    for k, rows in enumerate(levels):
        for row in rows:
            acc = abs(row[-1])
            for a in row[:-1]:
                acc += abs(a) * (radius + 1)
            if acc >= _LIMIT:
                return False
    return True


def scan(levels, radius=None, backend=None):
    """Integer points of the region described level by level, in lex order.

    ``radius`` bounds |y_k| over the region; the compiled kernel is only used
    when it is given and every intermediate provably fits in int64.
    """
    return _pick(levels, radius, backend).scan(levels)


def scan_count(levels, radius=None, backend=None):
    return _pick(levels, radius, backend).scan_count(levels)


def _pick(levels, radius, backend):
    if backend == "python" or _compiled is None:
        if backend == "cython":
            raise ImportError("compiled kernel is not available")
        return _scan_py
    if radius is not None and _fits(levels, radius):
        return _compiled
    if backend == "cython":
        raise OverflowError("coefficients too large for the int64 kernel")
    return _scan_py
