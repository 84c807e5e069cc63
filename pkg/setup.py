from setuptools import find_packages, setup

setup(
    name="faceopt",
    version="1.0.0",
    description="Face-size optimization and recognition for planar embeddings of biconnected multigraphs",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    package_data={"faceopt.cli": ["templates/*.jinja"]},
    python_requires=">=3.10",
    install_requires=[
        "jinja2>=3.1",
        "python-dotenv>=1.0",
        "pydantic>=2.5,<3",
        "networkx>=3.0",
    ],
    extras_require={"test": ["pytest>=7", "hypothesis>=6"]},
    entry_points={"console_scripts": ["faceopt=faceopt.cli.main:main"]},
)
