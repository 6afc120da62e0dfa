"""Build the optional compiled kernels.

If Cython or a C compiler is missing the package still installs and the
pure-Python kernels are used.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("sievekit._ckernels", ["src/sievekit/_ckernels.pyx"],
                   extra_compile_args=["-O2"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
