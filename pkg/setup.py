"""Build script: compiles the optional packed-word kernel when Cython is present.

The package is fully functional without the extension; `boolmat._kernel`
falls back to the pure-Python implementation at import time.
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
                "boolmat._kernel._packed",
                sources=["src/boolmat/_kernel/_packed.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
