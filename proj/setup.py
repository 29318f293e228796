"""Builds the `cdsample._core` extension with pybind11's setuptools helpers."""

import glob
import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    try:
        flags = subprocess.check_output(["pkg-config", "--cflags-only-I", "eigen3"], text=True)
        return [f[2:] for f in flags.split() if f.startswith("-I")]
    except (OSError, subprocess.CalledProcessError):
        return ["/usr/include/eigen3"]


ext = Pybind11Extension(
    "cdsample._core",
    sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include"] + eigen_include(),
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
