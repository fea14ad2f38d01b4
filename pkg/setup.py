from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The compiled search core is optional; kcoal falls back to the pure
    # Python kernel when the extension is absent.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "kcoal._kernel",
                ["src/kcoal/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
