import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; t2interval.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "t2interval._kernels",
                ["src/t2interval/_kernels.pyx"],
                include_dirs=[np.get_include()],
                # keep products bit-identical to the numpy fallback
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
