"""Build script: compiles the optional row-reduction extension.

The compiled kernel is a performance twin of ``lagsel._rref_py``; if Cython or
a C compiler is unavailable the build degrades gracefully and the package
falls back to the pure-Python kernel at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build extensions, but never fail the install over them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: skipping compiled kernel {ext.name} ({exc})")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lagsel._rref", ["src/lagsel/_rref.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not available, building without the compiled kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
