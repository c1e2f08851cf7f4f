# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

version = "1.0.0"

with open("README.rst", "r") as fh:
    long_description = fh.read()

with open("docs/changelog.rst", "r") as fh:
    long_description += "\n\n"
    long_description += fh.read()

setup(
    name="modcurve.biell",
    version=version,
    description="Bielliptic quotients of modular curves X0(N)/W",
    long_description=long_description,
    # Get more strings from
    # http://pypi.python.org/pypi?:action=list_classifiers
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
    ],
    keywords=["modular curves", "atkin-lehner", "bielliptic",
              "modular symbols"],
    author="MODCURVE.BIELL developers",
    license="GPLv2",
    packages=find_packages("src", exclude=["ez_setup"]),
    package_dir={"": "src"},
    namespace_packages=["modcurve"],
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.6",
    install_requires=[
        "setuptools",
        "sympy>=1.13",
    ],
    extras_require={
        "test": [
            "pytest",
        ]
    },
    entry_points="""
      # -*- Entry points: -*-
      [console_scripts]
      modcurve-biell = modcurve.biell.cli:main
      """,
)
