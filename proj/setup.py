"""Builds the compiled extension through CMake and packages it with the
python sources. The usual entry points work:

    pip install . --no-build-isolation
    pip install -e . --no-build-isolation
"""

import subprocess
import sys
from pathlib import Path

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        package_dir = ext_path.parent

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DASSOC_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "assoc_py",
             "--parallel"],
            check=True,
        )

        package_dir.mkdir(parents=True, exist_ok=True)
        built = list((build_dir / "python" / "assoc_schemes").glob("_core*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core extension")
        self.copy_file(str(built[0]), str(ext_path))


setup(
    packages=["assoc_schemes"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("assoc_schemes._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
