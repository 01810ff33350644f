"""Build script for the compiled term-arithmetic kernel.

The package works without the extension (superschur.backend falls back to
the pure-Python kernel), but the compiled kernel is what keeps the larger
verification grids fast.
"""

from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("superschur._terms_c", ["src/superschur/_terms_c.pyx"])],
        language_level="3",
    )
)
