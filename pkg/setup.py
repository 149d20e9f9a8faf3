import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "tracecodes.kernels._fast",
                ["src/tracecodes/kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
    )
else:
    # Pure-Python fallback in tracecodes.kernels still works without the extension.
    ext_modules = []

setup(ext_modules=ext_modules)
