"""Build script for the optional compiled cycle kernel.

The package works without the extension (a pure-Python fallback is selected
at import time); the compiled kernel only accelerates the exhaustive cycle
checks in quiverorbit.oracle.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("quiverorbit._cyclekernel", ["src/quiverorbit/_cyclekernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
