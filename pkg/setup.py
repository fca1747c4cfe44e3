from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The compiled scanner is optional; the package falls back to the
    # pure-Python implementation when the extension is missing.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("pragmaport._speedups", ["src/pragmaport/_speedups.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
