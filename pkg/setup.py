from Cython.Build import cythonize
from setuptools import Extension, setup

# The compiled core is optional at runtime; the package falls back to pure Python.
setup(
    ext_modules=cythonize(
        [Extension("wedcs._core", ["src/wedcs/_core.pyx"], extra_compile_args=["-O2"])],
        language_level=3,
    )
)
