"""Build hook for the optional compiled scalar backend.

The package is pure Python by default; when Cython and a C compiler are
available, the hot Gaussian-rational kernel is compiled and selected at
import time.  A failed extension build must never block installation.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lieradon/_core_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
