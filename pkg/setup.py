from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "affold._core",
                ["src/affold/_core.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: the package runs on the pure-Python kernels
    extensions = []

setup(ext_modules=extensions)
