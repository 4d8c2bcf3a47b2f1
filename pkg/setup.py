"""Build the optional compiled rank kernel; fall back to pure Python."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/jumploci/exact/_modrank.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print("jumploci: skipping compiled kernel (%s)" % exc)

setup(ext_modules=ext_modules)
