"""Build script for the optional compiled row-reduction kernel.

The package works without the extension (a numpy fallback is selected at
import time); set WEDDERBURN_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("WEDDERBURN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("wedderburn._speedups", ["src/wedderburn/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
