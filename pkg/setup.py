"""Build script: compiles the optional Cython kernel extension.

The extension is a pure accelerator.  If Cython or a C compiler is missing
the build falls through to the pure-Python backend, so installation never
fails on its account.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compilation failures to warnings."""

    def run(self) -> None:
        try:
            super().run()
        except Exception as exc:  # platform without a toolchain
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext) -> None:
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


def extensions() -> list:
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; installing with pure-Python kernels only")
        return []
    return cythonize(
        [
            Extension(
                "autbound._kernels.cyback",
                ["src/autbound/_kernels/cyback.pyx"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
