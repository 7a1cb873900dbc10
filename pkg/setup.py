"""Build script. Compiles the C speedup module when Cython and a C
compiler are available; the package works without it via the pure-Python
fallback in ingreval._fallback.

Set INGREVAL_PURE=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("INGREVAL_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "ingreval._speedups",
        ["src/ingreval/_speedups.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions())
