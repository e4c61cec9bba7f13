# -*- coding: utf-8 -*-

"""
Run the tests of one script or folder with ``pytest-cov`` and report the
coverage of one module only.

Usage example, at the bottom of a test script::

    if __name__ == "__main__":
        from swe2.tests.helper import run_cov_test

        run_cov_test(__file__, "swe2.textnorm", preview=False)
"""

import typing as T
import sys
import subprocess
import webbrowser
from pathlib import Path


def _locate_pytest() -> T.List[str]:
    bin_pytest = Path(sys.executable).parent / "pytest"
    if bin_pytest.exists():
        return [f"{bin_pytest}"]
    return [sys.executable, "-m", "pytest"]


def run_cov_test(
    script: str,
    module: str,
    root_dir: str,
    htmlcov_dir: str,
    preview: bool = False,
    is_folder: bool = False,
):
    """
    :param script: the test script, usually ``__file__``.
    :param module: dotted name of the module to measure, e.g. ``swe2.textnorm``.
    :param root_dir: the project root, the working directory of pytest.
    :param htmlcov_dir: where the html report is written.
    :param preview: open the html report in a browser.
    :param is_folder: test the whole folder that holds ``script``.
    """
    path_script = Path(script).absolute()
    target = path_script.parent if is_folder else path_script
    args = _locate_pytest() + [
        "-s",
        "--tb=native",
        f"--rootdir={root_dir}",
        f"--cov={module}",
        "--cov-report",
        "term-missing",
        "--cov-report",
        f"html:{htmlcov_dir}",
        f"{target}",
    ]
    subprocess.run(args, cwd=root_dir, check=False)
    if preview:  # pragma: no cover
        index = Path(htmlcov_dir) / "index.html"
        webbrowser.open(index.as_uri())
