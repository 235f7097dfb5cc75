from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "kcut._ckernels",
                ["src/kcut/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
