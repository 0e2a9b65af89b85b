"""Build script: compiles the optional Cython speedup kernels.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build silently falls back to pure Python.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/markedbasis/_speedups.pyx",
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"markedbasis: skipping C extension ({exc}); using pure-Python kernels")

setup(ext_modules=ext_modules)
