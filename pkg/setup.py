"""Build the optional Cython kernel extension.

The package works without it (a pure-Python fallback is selected at
import), so a missing Cython or a failed compile only costs speed.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "avnlab.kernels._core",
                ["src/avnlab/kernels/_core.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
