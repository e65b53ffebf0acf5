"""Build the optional Cython kernel extension.

The package is pure Python; ``cslie._ikernels`` is a compiled twin of
``cslie._ikernels_py`` used when available.  If Cython or a C compiler is
missing the build silently skips the extension and the pure-Python kernels
are used instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cslie/_ikernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
