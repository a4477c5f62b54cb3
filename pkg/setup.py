import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="pygridcycles",
    version="0.1.0",
    description="Exact counts of Hamiltonian cycles on square grids by symmetry",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research"
    ],
    install_requires=[
    	"numpy>=1.18.4",
    	"pandas>=1.0.3",
    	"sympy>=1.9"
    ],
    extras_require={
        "tests": ["pytest>=6.0", "hypothesis>=5.0"],
    },
    entry_points={
        "console_scripts": ["gridcycles=pygridcycles.cli:main"],
    },
    python_requires='>=3.7',
)
