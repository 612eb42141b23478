import os
import subprocess
import sys

import pytest

from ehrlift import kernels
from ehrlift.kernels import _scan_py
from ehrlift.polytope import Polytope, standard_polytopes

needs_compiled = pytest.mark.skipif(not kernels.COMPILED_AVAILABLE, reason="extension not built")


def _cases():
    polys = standard_polytopes()
    for name in ("square", "triangle", "cube", "chengyang2"):
        for n in (0, 1, 3, 7):
            yield name, polys[name], n
    yield "rational", Polytope([(0, 0), ("3/2", 0), (0, "5/3")]), 5


@needs_compiled
@pytest.mark.parametrize("name,P,n", list(_cases()))
def test_backends_agree(name, P, n):
    levels = P._scan_levels(n, False)
    radius = P._radius(n)
    assert kernels.scan(levels, radius, backend="cython") == _scan_py.scan(levels)
    assert kernels.scan_count(levels, radius, backend="cython") == _scan_py.scan_count(levels)


def test_python_backend_is_self_consistent():
    P = standard_polytopes()["chengyang2"]
    levels = P._scan_levels(4, False)
    assert len(_scan_py.scan(levels)) == _scan_py.scan_count(levels) == 55


def test_large_values_fall_back_to_python():
    levels = [[(1, 10 ** 30), (-1, 0)]]
    assert kernels.scan_count(levels, radius=10 ** 30) == 10 ** 30 + 1


@needs_compiled
def test_forced_compiled_overflow_is_refused():
    with pytest.raises(OverflowError):
        kernels.scan_count([[(1, 10 ** 30), (-1, 0)]], radius=10 ** 30, backend="cython")


def test_pure_python_switch():
    code = "import ehrlift.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, EHRLIFT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
