"""Build script: compiles the optional Cython evaluation kernel.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional and a failed compile
does not abort installation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext = Extension(
        "morseflow._kernels",
        ["src/morseflow/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
