import setuptools

with open("readme.md", "r") as fh:
    long_description = fh.read()

description = (
    "Exact Fock-space traces and closed-form q-series for Hilbert schemes "
    "of points on surfaces"
)

setuptools.setup(
    name="hilbq",
    version="0.1.0",
    description=description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
    install_requires=["typing_extensions"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["hilbq = hilbq.cli:main"]}
)
