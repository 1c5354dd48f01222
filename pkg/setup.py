from setuptools import setup, find_packages
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="gerty",
    version="0.1.0",
    author="The Gerty developers",
    description="A type checker for graded modal dependent type theory, with grade-directed optimisations.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Software Development :: Compilers",
    ],
    keywords="type theory dependent types graded modalities semirings type checker",
    packages=find_packages(exclude=["contrib", "docs", "tests"]),
    package_data={"gerty.syntax": ["*.lark"], "gerty.solver": ["*.lark"]},
    install_requires=[
        "python-dotenv>=0.10.3",
        "lark>=1.1",
        "z3-solver>=4.8",
    ],
    python_requires=">=3.8",
    entry_points={"console_scripts": ["gerty=gerty.cli:main"]},
)
