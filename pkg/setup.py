from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("cfcolor._speedups", ["src/cfcolor/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package works without the compiled kernels (pure-Python fallback)
    extensions = []

setup(ext_modules=extensions)
