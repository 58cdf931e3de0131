"""Builds the pybind11 extension through the project's CMake configuration."""

import os
import shutil
import subprocess
import sys
from pathlib import Path

import pybind11
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        config = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={config}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            "-DFRACDG_BUILD_TESTS=OFF",
            "-DFRACDG_BUILD_CLI=OFF",
        ]
        env = os.environ.copy()
        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_dir)] + cmake_args,
            check=True,
            env=env,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
            env=env,
        )

        # cmake drops the module under <build>/python/fracdg; move it to the
        # path setuptools expects for this extension
        produced = sorted((build_dir / "python" / "fracdg").glob("_core.*"))
        modules = [p for p in produced if p.suffix in (".so", ".pyd", ".dylib")]
        if not modules:
            raise RuntimeError(f"extension module not found in {build_dir}")
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(modules[-1], ext_path)


setup(
    ext_modules=[CMakeExtension("fracdg._core")],
    cmdclass={"build_ext": CMakeBuild},
)
