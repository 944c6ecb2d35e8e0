import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        # get_ext_fullpath ends in tccs/_tccs.<abi>.so; cmake needs the dir
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = [
            "cmake",
            str(Path(__file__).parent.resolve()),
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DTCCS_BUILD_TESTS=OFF",
            "-DTCCS_BUILD_CLI=OFF",
        ]
        subprocess.run(cfg, cwd=build_dir, check=True)
        jobs = os.cpu_count() or 1
        subprocess.run(
            ["cmake", "--build", ".", "--target", "tccs_py", "-j", str(jobs)],
            cwd=build_dir,
            check=True,
        )


setup(
    name="tccs",
    version="0.1.0",
    description="historical temporal k-core component search",
    packages=["tccs"],
    package_dir={"tccs": "python/tccs"},
    ext_modules=[CMakeExtension("tccs._tccs")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
    python_requires=">=3.8",
)
