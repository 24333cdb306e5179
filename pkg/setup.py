"""Build script: compiles the search kernel extension when Cython and a C
compiler are available, otherwise installs with the pure-Python kernel only."""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernel instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: compiled kernel unavailable (%s); "
            "falling back to the pure-Python kernel" % exc,
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not installed; building without the compiled "
              "kernel", file=sys.stderr)
        return []
    return cythonize(
        [Extension("parikhgrid._kernel", ["src/parikhgrid/_kernel.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
