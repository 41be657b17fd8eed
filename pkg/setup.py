"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "foursq.kernels._fast",
                ["src/foursq/kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
