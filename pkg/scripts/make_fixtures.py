#!/usr/bin/env python3
"""Regenerate the .src fixtures and the CLI golden outputs under tests/.

Run from the repository root:  python3 scripts/make_fixtures.py
"""

import io
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from conftest import (  # noqa: E402
    dual_distribution_pair,
    msrd_d4_gf3_code,
    msrd_d6_code,
    rank2_plus_pivot_code,
    spherepack_d3_code,
)
from scripts_commands import COMMANDS  # noqa: E402
from srkit.cli import main  # noqa: E402
from srkit.field import field_create  # noqa: E402
from srkit.srcfile import write_src  # noqa: E402

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"


def make_fixtures():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    write_src(msrd_d6_code(field_create(2)), FIXTURES / "msrd_d6_8blocks.src")
    write_src(msrd_d6_code(field_create(3)), FIXTURES / "msrd_d6_8blocks_gf3.src")
    write_src(msrd_d4_gf3_code(), FIXTURES / "msrd_d4_gf3.src")
    write_src(spherepack_d3_code(), FIXTURES / "spherepack_d3.src")
    ca, cb = dual_distribution_pair()
    write_src(ca, FIXTURES / "dualpair_a.src")
    write_src(cb, FIXTURES / "dualpair_b.src")
    write_src(rank2_plus_pivot_code(2), FIXTURES / "dual_not_msrd.src")


def make_golden():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in COMMANDS:
        buf = io.StringIO()
        rc = main(argv, out=buf)
        (GOLDEN / name).write_text(f"exit {rc}\n{buf.getvalue()}")
        print(f"  {name}: exit {rc}")


if __name__ == "__main__":
    import os
    os.chdir(ROOT)
    make_fixtures()
    make_golden()
    print("fixtures and golden files regenerated")
