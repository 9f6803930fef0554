"""Build script for the optional compiled kernels.

Without Cython, or if the compiler fails, the package installs without the
extension and ``skeindim.kernels`` falls back to pure Python.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("skeindim._kernels", ["src/skeindim/_kernels.pyx"], extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
