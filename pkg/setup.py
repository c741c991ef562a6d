import sys

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("notascope._kernels._fast", ["src/notascope/_kernels/_fast.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - pure-python install path
    print(f"notascope: building without compiled kernels ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
