"""Frozen command/output pairs for the command-line interface.

Each case names an argv vector, the expected exit code, and golden
files under tests/golden/: <name>.out holds the exact stdout and
<name>.err, when present, the exact stderr.  Cases with a "prep" entry
first run that argv and feed its stdout to the main command through a
temporary file substituted for the {MODULE} placeholder.
"""

import io
import os
from contextlib import redirect_stderr, redirect_stdout

from qheisenberg.cli import main

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

GOLDEN_CASES = [
    {"name": "pideg_23", "exit": 0,
     "argv": ["pideg", "--m", "2", "--n", "3", "--k1", "1", "--k2", "1"]},
    {"name": "pideg_44_table", "exit": 0,
     "argv": ["pideg", "--m", "4", "--n", "4", "--format", "table"]},
    {"name": "order_44", "exit": 0,
     "argv": ["order", "--m", "4", "--n", "4", "--k1", "1", "--k2", "1"]},
    {"name": "order_23", "exit": 0,
     "argv": ["order", "--m", "2", "--n", "3"]},
    {"name": "scan_99", "exit": 0,
     "argv": ["scan", "--m", "9", "--n", "9"]},
    {"name": "scan_33_table", "exit": 0,
     "argv": ["scan", "--m", "3", "--n", "3", "--format", "table"]},
    {"name": "scan_44", "exit": 0,
     "argv": ["scan", "--m", "4", "--n", "4"]},
    {"name": "center_23", "exit": 0,
     "argv": ["center", "--m", "2", "--n", "3"]},
    {"name": "center_23_table", "exit": 0,
     "argv": ["center", "--m", "2", "--n", "3", "--format", "table"]},
    {"name": "nf_yx", "exit": 0,
     "argv": ["normal-form", "--m", "2", "--n", "3", "--k1", "1",
              "--k2", "1", "y*x"]},
    {"name": "nf_yx2_table", "exit": 0,
     "argv": ["normal-form", "--m", "2", "--n", "3", "y*x^2",
              "--format", "table"]},
    {"name": "nf_theta_cube_table", "exit": 0,
     "argv": ["normal-form", "--m", "2", "--n", "3", "theta^3",
              "--format", "table"]},
    {"name": "nf_scalar", "exit": 0,
     "argv": ["normal-form", "--m", "2", "--n", "3", "3/2 g^2 - 1"]},
    {"name": "build_v1", "exit": 0,
     "argv": ["module-build", "--m", "2", "--n", "3", "--kind", "V1",
              "--mu", "1", "--lam", "2", "--gamma", "3"]},
    {"name": "build_qplane_z_table", "exit": 0,
     "argv": ["module-build", "--m", "2", "--n", "3", "--kind", "QPlaneZ",
              "--mu", "2", "--gamma", "g", "--format", "table"]},
    {"name": "classify_v2", "exit": 0, "argv": ["module-classify", "--in",
                                                "{MODULE}"],
     "prep": ["module-build", "--m", "2", "--n", "3", "--kind", "V2",
              "--mu", "2", "--lam", "g"]},
    {"name": "simple_v3", "exit": 0, "argv": ["module-simple", "--in",
                                              "{MODULE}"],
     "prep": ["module-build", "--m", "4", "--n", "4", "--kind", "V3",
              "--lam", "1"]},
    {"name": "verify_v2", "exit": 0, "argv": ["module-verify", "--in",
                                              "{MODULE}"],
     "prep": ["module-build", "--m", "2", "--n", "3", "--kind", "V2",
              "--mu", "2", "--lam", "g"]},
    {"name": "iso_v1_shift", "exit": 0,
     "argv": ["iso", "--m", "2", "--n", "3", "--kind", "V1",
              "--mu", "1", "--lam", "2", "--gamma", "3",
              "--mu2", "g", "--lam2=-2", "--gamma2", "3"]},
    {"name": "iso_v2_negative", "exit": 0,
     "argv": ["iso", "--m", "2", "--n", "3", "--kind", "V2",
              "--mu", "1", "--lam", "2", "--mu2", "1", "--lam2", "3"]},
    {"name": "err_expr_syntax", "exit": 2,
     "argv": ["normal-form", "--m", "2", "--n", "3", "y*(x"]},
    {"name": "err_excluded_pair", "exit": 1,
     "argv": ["pideg", "--m", "4", "--n", "4", "--k1", "1", "--k2", "3"]},
]


def run_case(case: dict, tmpdir: str) -> tuple[int, str, str]:
    """Execute a golden case in-process; returns (exit, stdout, stderr)."""
    argv = list(case["argv"])
    if case.get("prep"):
        prep_out = io.StringIO()
        with redirect_stdout(prep_out):
            code = main(case["prep"])
        if code != 0:
            raise RuntimeError(f"prep command failed for {case['name']}")
        path = os.path.join(tmpdir, case["name"] + ".module.json")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(prep_out.getvalue())
        argv = [arg.replace("{MODULE}", path) for arg in argv]
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def expected_output(case: dict) -> tuple[str, str]:
    """The frozen (stdout, stderr) pair for a case."""
    with open(os.path.join(GOLDEN_DIR, case["name"] + ".out"),
              encoding="utf-8") as handle:
        out = handle.read()
    err_path = os.path.join(GOLDEN_DIR, case["name"] + ".err")
    err = ""
    if os.path.exists(err_path):
        with open(err_path, encoding="utf-8") as handle:
            err = handle.read()
    return out, err
