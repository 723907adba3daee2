from setuptools import setup, find_packages

setup(
    name="anyon1d",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"anyon1d": ["schemas/*.json"]},
    install_requires=[
        "langgraph>=0.2.0",
        "pydantic>=2.5",
        "numpy>=1.24.3",
        "scipy>=1.11",
        "mpmath>=1.3",
        "pandas>=2.0.2",
        "jsonschema>=4.17",
        "python-dotenv>=1.0",
    ],
    extras_require={
        "test": ["pytest>=7.4", "hypothesis>=6.80"],
    },
    entry_points={
        "console_scripts": ["anyon1d=anyon1d.cli:main"],
    },
    python_requires=">=3.9",
)
