"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension (ksverify.kernels
falls back to the pure-numpy backend); building it just makes the series
kernels faster. If Cython is unavailable the extension is skipped.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ksverify._native",
                ["src/ksverify/_native.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
