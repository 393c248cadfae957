"""Build script for the optional compiled rank kernel.

The package works without the extension (a pure-Python fallback is selected
at import time); the extension just makes the homology oracle faster.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("eideal._rankcore", ["src/eideal/_rankcore.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
