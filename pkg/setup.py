import os

from setuptools import Extension, setup

# The Groebner reduction kernel ships both as Cython and as pure Python;
# set CYCONTRACT_PURE=1 to skip the compiled extension entirely.
ext_modules = []
if os.environ.get("CYCONTRACT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cycontract.groebner._core",
                    ["src/cycontract/groebner/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
