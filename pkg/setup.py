import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "akltneg._jacobi_cy",
                ["src/akltneg/_jacobi_cy.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-python fallback is selected at import time, so a missing
    # compiler toolchain only costs speed, not functionality.
    ext_modules = []

setup(ext_modules=ext_modules)
