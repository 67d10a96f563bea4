"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python/numpy fallback is
selected at import time); compiling it makes exhaustive enumeration,
meet-in-the-middle search, and pair-coverage counting much faster.
"""
from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "steinerforge._kernels",
        ["src/steinerforge/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
