"""Build script: compiles the coefficient kernel when a toolchain is present.

The extension is optional; without a compiler the package installs anyway and
the pure-Python kernel takes over at import time.  Build in place with

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("kholo._gqkernel", ["src/kholo/_gqkernel.pyx"],
                   optional=True)],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
