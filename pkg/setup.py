from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install pure-Python only, the numpy fallback kernel is used.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bathlab._kernels._secular",
                ["src/bathlab/_kernels/_secular.pyx"],
                extra_compile_args=["-O3", "-fopenmp"],
                extra_link_args=["-fopenmp"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
