# -*- coding: utf-8 -*-
"""
Install script
"""
import os
from setuptools import find_packages, setup

with open("README.md", "r", encoding="utf-8") as file:
    long_description = file.read()

with open("requirements.txt", "r", encoding="utf-8") as f:
    required_lib = f.read().splitlines()

setup(
    name="latticeprop",
    version=os.getenv("GITHUB_REF_NAME", "0.1.0"),
    long_description=long_description,
    long_description_content_type="text/markdown",
    description="Discrete lattice propagators, polygonal metrics and continuous multinomials",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=required_lib,
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["latticeprop=latticeprop.cli:main"]},
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
