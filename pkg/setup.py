try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

import re

with open("tkkbench/_version.py") as handle:
    version = re.search(r'__version__ = "([^"]+)"', handle.read()).group(1)

setup(
    name="tkkbench",
    version=version,
    author="tkkbench contributors",
    packages=["tkkbench"],
    license="Apache License",
    description="Exact checks of ternary algebras, TKK constructions and "
                "Dynkin indices of exceptional Lie algebras",
    long_description=open('README.rst').read(),
    entry_points={
        'console_scripts': [
            'tkkbench = tkkbench.cli:main',
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.6",
    install_requires=[
        "numpy",
        "pandas",
        "sympy",
        "nose",
        "typechecks",
    ],
)
