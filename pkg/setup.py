"""Build hooks for the optional compiled Murnaghan-Nakayama kernel.

The package is pure Python; the extension only accelerates the border
strip recursion.  Building it requires Cython and a C compiler, and is
marked optional so environments without either still install cleanly
(the pure kernel in ``kronmf._mn_py`` is selected at import time).
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
                "kronmf._mnkernel",
                ["src/kronmf/_mnkernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
