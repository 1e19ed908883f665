"""Build hook for the optional C canonical-labeling kernel.

The package is pure Python; the extension only accelerates the hot loop
(graph canonical forms inside the switching-class enumeration).  If Cython
or a C compiler is unavailable the install proceeds without it and the
pure-Python kernel is selected at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("seidel._canon_c", ["src/seidel/_canon_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    extensions = []

setup(ext_modules=extensions)
