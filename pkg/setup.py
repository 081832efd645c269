from setuptools import setup, find_packages

setup(
    name="fptStreamSolver",
    version="0.1",
    packages=find_packages(exclude=["test"]),
    install_requires=[
        "bitstring",
        "windows-curses; platform_system == 'Windows'",
        "fastlog",
        "networkx>=3.1",
        "numpy",
    ],
)
