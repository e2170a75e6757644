"""Build hook for the optional compiled summation kernel.

The extension is a pure speedup: when Cython or a C compiler is missing the
install still succeeds and the package falls back to the pure-Python kernels
(`altzeta._kernels_py`) selected at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler etc.
            print(f"warning: compiled kernel skipped ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled kernel skipped ({exc}); pure-Python fallback will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; pure-Python kernels will be used")
        return []
    return cythonize(
        ["src/altzeta/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
