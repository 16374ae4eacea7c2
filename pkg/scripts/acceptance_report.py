#!/usr/bin/env python3
"""Run the acceptance criteria standalone and print one line per criterion."""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

result = subprocess.run(
    [
        sys.executable,
        "-m",
        "pytest",
        str(ROOT / "tests" / "test_acceptance.py"),
        "-q",
        "-s",
        "--no-header",
    ],
    cwd=ROOT,
)
sys.exit(result.returncode)
