"""Builds the optional compiled kernel extension.

The package works without it (a pure-Python fallback is selected at
import time); building with Cython available produces the fast kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "treeirr._kernels._ckernels",
                ["src/treeirr/_kernels/_ckernels.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
