import setuptools
from pactlib import __version__

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="pactlib",
    version=__version__,
    description="Proof-artifact co-training toolkit: term extraction, task datasets, tactic proof search and evaluation",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    install_requires=[
        'aiohttp'
    ],
    extras_require={
        'test': ['pytest']
    },
    packages=setuptools.find_packages(exclude=["test", "test.*"]),
    package_data={"pactlib": ["data/*"]},
    entry_points={
        "console_scripts": ["pactlib=pactlib.edge:main"]
    },
    python_requires=">=3.8",
    setup_requires=['wheel']
)
