"""Build the optional Cython graph kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("DRG_NO_EXTENSION"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("drgscheme._kernels", ["src/drgscheme/_kernels.pyx"], include_dirs=[numpy.get_include()])],
            compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
