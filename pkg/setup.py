import os
from setuptools import setup, find_packages

__version__ = None
pth = os.path.join(
    os.path.dirname(os.path.realpath(__file__)),
    "morsecx",
    "_version.py")
with open(pth, 'r') as fp:
    exec(fp.read())

setup(
    name="morsecx",
    description=(
        "Morse complexes of simplicial complexes and their automorphism "
        "groups"
    ),
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=["numpy", "numba", "networkx"],
    entry_points={
        "console_scripts": ["morsecx=morsecx.cli:main"],
    },
    version=__version__,
)
