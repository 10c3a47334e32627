"""Build script for the optional compiled capacity kernel.

The package works without the extension: ``mimo_ee.backend`` falls back to a
pure-numpy implementation when the compiled module is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mimo_ee._capacity_kernel",
                ["src/mimo_ee/_capacity_kernel.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
