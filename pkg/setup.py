"""Build shim: compiles the optional evaluation kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so any compiler/Cython failure downgrades to a
pure-Python install instead of aborting.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext = Extension(
        "zetaladder._zkernel",
        sources=["src/zetaladder/_zkernel.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3", "-ffast-math"],
        # -ffast-math lets gcc vectorize the cos loop via libmvec; link it
        extra_link_args=["-lmvec", "-lm"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext.optional = True  # compile failure -> pure-Python install
    ext_modules = cythonize([ext], language_level="3")
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"zetaladder: skipping compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
