"""Build script: compiles the optional sweep-kernel extension.

The package is pure Python; `egfrac._kernels_c` is an optional Cython
extension that accelerates the hot inner loops (two-term scans and the
floor-inequality point checks). If Cython or a C compiler is missing the
build falls through and the package transparently uses the pure-Python
kernels at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a pure-Python install on any failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernels ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"failed to build {ext.name} ({exc}); using pure-Python fallback")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; installing with pure-Python kernels only")
        return []
    return cythonize(
        [Extension("egfrac._kernels_c", ["src/egfrac/_kernels_c.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
