"""Build script: compiles the optional Cython kernel when possible.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any build failure here downgrades
to a warning instead of aborting the install.  Set CATALEMMA_NO_EXT=1 to
skip the extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            print(f"warning: skipping compiled kernel ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: skipping {ext.name} ({exc})", file=sys.stderr)


ext_modules = []
if not os.environ.get("CATALEMMA_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("catalemma._ckernels", ["src/catalemma/_ckernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; building without compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
