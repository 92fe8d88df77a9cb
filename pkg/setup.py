from setuptools import setup, find_namespace_packages

setup(
    name="nerode",
    version="0.1.0",
    description="Regular expressions, finite automata and Myhill-Nerode classes",
    packages=find_namespace_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        # standard library only
    ],
    entry_points={
        "console_scripts": ["nerode = nerode.cli:main"],
    },
    python_requires=">=3.11",
)
