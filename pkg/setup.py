import numpy as np
from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension(
            "gaugediam._seidel",
            ["src/gaugediam/_seidel.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3"],
        )],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # pure-python fallback is selected at import time when the extension is absent
    ext_modules = []

setup(ext_modules=ext_modules)
