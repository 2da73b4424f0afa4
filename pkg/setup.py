from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "laver.kernels._rowbuild",
                ["src/laver/kernels/_rowbuild.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: install with the pure-Python kernel only
    extensions = []

setup(ext_modules=extensions)
