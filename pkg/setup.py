"""Build script: compiles the optional Cython kernel extension.

If Cython (or a C compiler) is unavailable the package still installs and
falls back to the pure-Python/numpy kernels at import time.
"""
from setuptools import setup

kwargs = {}
try:
    from Cython.Build import cythonize

    kwargs["ext_modules"] = cythonize(
        ["src/changekit/_kernels.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"changekit: skipping compiled kernels ({exc}); pure-Python fallback will be used")

setup(**kwargs)
