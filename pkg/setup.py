"""Build the optional Cython scan kernel; the package works without it."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("EHRLIFT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("ehrlift.kernels._scan", ["src/ehrlift/kernels/_scan.pyx"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
