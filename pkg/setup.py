"""Build script for the compiled kernel extension.

The package works without the extension (the pure-Python backend is
selected at import time), so a failed compile only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/homcx/_kernels/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
