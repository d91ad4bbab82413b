"""
Setup file for `abugida`.
"""

# Import Python standard libraries
from setuptools import setup, find_packages
import pathlib

# The directory containing this file
LOCAL_PATH = pathlib.Path(__file__).parent

# The text of the README file
README_FILE = (LOCAL_PATH / "README.md").read_text(encoding="utf-8")

# Load requirements, so they are listed in a single place
with open("requirements.txt", encoding="utf-8") as fp:
    install_requires = [dep.strip() for dep in fp.readlines() if dep.strip()]

# This call to setup() does all the work
setup(
    author="The abugida developers",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Text Processing :: Linguistic",
    ],
    description="Unicode normalizer and grapheme parser for Indic Abugida scripts",
    entry_points={"console_scripts": ["abugida=abugida.__main__:main"]},
    extras_require={
        "dev": ["black", "flake8", "twine", "wheel"],
        "test": ["pytest"],
    },
    include_package_data=True,
    install_requires=install_requires,
    keywords=[
        "unicode normalization",
        "grapheme segmentation",
        "indic scripts",
        "bangla",
        "devanagari",
    ],
    license="MIT",
    long_description=README_FILE,
    long_description_content_type="text/markdown",
    name="abugida",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"abugida": ["data/*.yaml", "data/samples/*.txt"]},
    python_requires=">=3.8",
    test_suite="tests",
    tests_require=[],
    version="0.1.0",  # remember to sync with __init__.py and docs/conf.py
    zip_safe=False,
)
