"""setuptools backend that ignores setup.py.

setup.py in this repository is the project bootstrap script (directory
creation, smoke test, test runner), not a setuptools script, so packaging
metadata lives in pyproject.toml and setup.py must not be executed here.
"""

from setuptools import build_meta as _orig

_SETUP = "from setuptools import setup; setup()"


class _Backend(_orig._BuildMetaBackend):
    def run_setup(self, setup_script="setup.py"):
        exec(compile(_SETUP, "<pyproject>", "exec"), {"__name__": "__main__"})


_BACKEND = _Backend()
get_requires_for_build_wheel = _BACKEND.get_requires_for_build_wheel
get_requires_for_build_sdist = _BACKEND.get_requires_for_build_sdist
get_requires_for_build_editable = _BACKEND.get_requires_for_build_editable
prepare_metadata_for_build_wheel = _BACKEND.prepare_metadata_for_build_wheel
prepare_metadata_for_build_editable = _BACKEND.prepare_metadata_for_build_editable
build_wheel = _BACKEND.build_wheel
build_sdist = _BACKEND.build_sdist
build_editable = _BACKEND.build_editable
