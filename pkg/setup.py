"""Setup configuration for Turannical."""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="turannical",
    version="0.9.0",
    author="Turannical Contributors",
    description="Restriction hypergraphs for Turán-type problems: exact solvers and threshold experiments",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="GNU General Public License v3",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.10",
    install_requires=[
        "pydantic>=2.12.3",
        "numpy>=2.2",
        "scipy>=1.15",
        "pandas>=2.3.3",
    ],
    extras_require={
        "dev": [
            "pytest>=8.4.2",
            "pytest-cov>=7.0.0",
            "hypothesis>=6.140.0",
            "black>=25.9.0",
            "ruff>=0.14.1",
        ],
    },
    entry_points={
        "console_scripts": [
            "turannical=turannical.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
