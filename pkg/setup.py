from setuptools import setup, find_packages
import sys

if sys.version_info < (3, 6):
    sys.exit("Sorry, Python3.6 or above is required.")

with open("README.md", encoding="utf8") as f:
    readme = f.read()

setup(
    name="cliffcz",
    version="0.1.0",
    license="MIT",
    description="Exact two qubit Clifford group tables, local orbits and minimal CZ synthesis",
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude="test"),
    install_requires=[
        "numpy>=1.20", "networkx>=2.5", "tqdm>=4.40", "python-dotenv>=0.10.1"],
    entry_points={
        "console_scripts": ["cliffcz=cliffcz.cli:main"]
    },
    keywords=[
        "quantum computing", "clifford group", "circuit synthesis", "cz gate",
        "cosets", "exact arithmetic", "cyclotomic integers"]
)
