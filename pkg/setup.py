"""Build the optional compiled kernels for se2up.

The package works without them: ``se2up.kernels`` falls back to the numpy
implementation when the extension is missing.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SE2UP_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "se2up._ckernels",
                    ["src/se2up/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )

setup(ext_modules=ext_modules)
