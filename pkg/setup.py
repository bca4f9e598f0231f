from Cython.Build import cythonize
from setuptools import setup

setup(
    ext_modules=cythonize(
        "src/catnum/_engine.pyx",
        language_level="3",
    ),
)
