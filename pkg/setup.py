"""Optional compiled kernel; the package works without it (pure-Python fallback)."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("STATESUM_NO_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("statesum._kernels", ["src/statesum/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
