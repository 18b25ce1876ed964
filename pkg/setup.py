from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("crossforge._kernels", ["src/crossforge/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"boundscheck": False, "wraparound": False,
                             "cdivision": True, "language_level": "3"},
    )
except ImportError:
    # pure-Python fallback is selected at import time; the wheel still works
    extensions = []

setup(ext_modules=extensions)
