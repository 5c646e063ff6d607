from setuptools import setup, find_packages

setup(
    name="tactile-player",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    package_data={"src.profiles": ["presets/*.json"]},
    install_requires=[
        "python-dotenv",
        "numpy",
        "pandas",
        "pydantic>=2.0",
        "pyserial",
        "rich",
    ],
    extras_require={
        "dev": [
            "pytest",
            "pytest-cov",
            "mido",
            "black",
            "flake8",
            "mypy",
        ]
    },
    entry_points={
        "console_scripts": [
            "tactile-player=src.main:main",
        ]
    },
    description="Motor háptico que transforma música MIDI em vibrações em 10 pontos da palma da mão",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    python_requires=">=3.9",
)
