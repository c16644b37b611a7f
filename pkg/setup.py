from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: ship the pure-Python kernels only.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "anumber._kernels._cykernels",
                ["src/anumber/_kernels/_cykernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
