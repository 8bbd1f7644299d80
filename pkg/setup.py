from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("entcat._ckernels", ["src/entcat/_ckernels.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # No Cython: ship pure Python only; entcat.kernels falls back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
