from setuptools import setup, find_namespace_packages

PACKAGE_VERSION = "0.1.0"

requirements = [
    "click>=7.0",
    "numpy>=1.16",
    "pyyaml>=5",
    "matplotlib>=3.1",
]

test_requirements = ["pytest>=5.2", "pytest-cov"]

with open("README.md") as readme_file:
    readme = readme_file.read()

with open("HISTORY.md", "r", encoding="utf-8") as history_file:
    history = history_file.read()

setup(
    python_requires=">=3.7",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=requirements,
    tests_require=test_requirements,
    extras_require={"test": test_requirements},
    name="ipgeom-closure",
    license="BSD license",
    long_description=readme + "\n\n" + history,
    long_description_content_type="text/markdown",
    packages=find_namespace_packages(include=["ipgeom.*"]),
    package_data={"ipgeom.closure": ["*.json", "*.yml"]},
    entry_points={"console_scripts": ["ipgeom-closure = ipgeom.closure.cli:cli"]},
    version=PACKAGE_VERSION,
    zip_safe=False,
)
