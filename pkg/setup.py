from setuptools import setup, find_packages

VERSION = "0.1.0"
DESCRIPTION = "Reducibility of multi-valued problems as containers"

def read(path):
    with open(path, "r") as f:
        return f.read()

setup(
        name="Wei-Containers",
        version=VERSION,
        description=DESCRIPTION,
        long_description=read("README.md"),
        long_description_content_type="text/markdown",
        packages=find_packages(exclude="tests"),
        install_requires=[
            "frozendict>=2.4",
            "networkx>=3.0",
            "graphviz>=0.20",
        ],
        extras_require={
            "tables": ["pandas==2.2.3"],
            "tests": ["pytest>=7.0", "hypothesis>=6.0"],
        },
        entry_points={
            "console_scripts": ["WeiContainers=WeiContainers.cli:main"],
        },
        keywords=['python', 'weihrauch', 'containers', 'realizability', 'polynomial functors'],
        classifiers= [
            "Development Status :: 3 - Alpha",
            "Intended Audience :: Science/Research",
            "Programming Language :: Python :: 3",
            "Topic :: Scientific/Engineering :: Mathematics",
            "Operating System :: MacOS :: MacOS X",
            "Operating System :: Microsoft :: Windows",
            "Operating System :: POSIX :: Linux",
        ],
)
