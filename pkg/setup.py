import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("STRETCHLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        extensions = cythonize(
            [
                Extension(
                    "stretchlab._kernels._speedups",
                    ["src/stretchlab/_kernels/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "embedsignature": True,
            },
        )

setup(ext_modules=extensions)
