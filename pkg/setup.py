import setuptools
from setuptools import setup

with open("README.md", "r") as f:
    long_description = f.read()


setup(
    # Information
    name="surface-factory",
    description="Normal surface enumeration, classification and triangulation census statistics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    version="0.3.0",
    license="MIT",
    keywords="normal surfaces 3-manifold triangulations double description census topology",
    install_requires=[
        "numpy>=1.18.1,<2.0",
        "networkx>=2.6",
        "sympy>=1.9",
        "psutil>=5.7.0",
        "threadpoolctl>=2.0.0",
        "colorlog",
        "filelock",
    ],
    extras_require={
        "dev": ["black", "isort>=5.12", "pytest<8.0", "flake8"],
    },
    entry_points={
        "console_scripts": [
            "surface-factory=surface_factory.cli.run:main",
        ],
    },
    package_dir={"": "./"},
    packages=setuptools.find_packages(where="./", include=["surface_factory*"]),
    include_package_data=True,
    python_requires=">=3.8",
)
