"""Build script: compiles the optional Cython kernel extension.

The package runs fine without the extension (a pure-Python fallback is
selected at import time), so any build failure here downgrades to a
source-only install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "closecactus._speedups",
                ["src/closecactus/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"closecactus: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
