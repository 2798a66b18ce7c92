"""Dimension series, the brute-force exterior check, and the CLI."""

import json
import os
import subprocess
import sys

import pytest

from cochainforge.charclass import (REFERENCE_17, classification_table,
                                    exterior_brute_force, exterior_basis,
                                    kernel_series_reference,
                                    page_differential, poincare_series)
from cochainforge.cli import main

FIX = os.path.join(os.path.dirname(__file__), "..", "src", "cochainforge",
                   "fixtures")


def test_series_reference_values():
    assert poincare_series(17) == REFERENCE_17
    assert poincare_series(0) == [1]
    # the subtracted square cancels the added one through degree 2
    assert poincare_series(2) == [1, 1, 0]


def test_exterior_dimensions_are_distinct_odd_partitions():
    basis = exterior_basis(16)
    # weight 16: 1+15, 3+13, 5+11, 7+9, 1+3+5+7
    assert len(basis[16]) == 5
    assert len(basis[8]) == 2  # 1+7, 3+5
    assert basis[4] == [(1, 3)]


def test_brute_force_matches_series():
    data = exterior_brute_force(24)
    ref = kernel_series_reference(24)
    for d in data:
        assert d.kernel_dim == ref[d.weight]
        if 0 < d.weight <= 22:
            assert d.cokernel_dim == 0
    assert data[3].kernel_dim == 0 and data[4].kernel_dim == 1
    ps = poincare_series(24)
    for n in range(25):
        assert ps[n] == ref[n] + (1 if n == 3 else 0)


def test_page_differential_squares_to_zero():
    def matmul(A, B):
        return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
                 for j in range(len(B[0]))] for i in range(len(A))]
    for n in range(2, 18):
        D1 = page_differential(20, n)
        D2 = page_differential(20, n + 1)
        if D1 and D2 and D1[0] and D2[0] and len(D2[0]) == len(D1):
            sq = matmul(D2, D1)
            assert all(all(x == 0 for x in row) for row in sq)


def test_classification_table():
    table = classification_table()
    assert [str(table[p]) for p in range(4)] == ["Z", "Z", "0", "Z"]


# -- command line -------------------------------------------------------

def test_cli_verify_and_unknown_id(capsys):
    assert main(["verify", "--id", "L-key.deltaA"]) == 0
    out = capsys.readouterr().out
    assert "L-key.deltaA" in out and "verified" in out
    assert main(["verify", "--id", "NOPE"]) == 2
    assert main(["verify", "--id", "L-5.3.gamma4", "--budget", "5"]) == 3


def test_cli_cohomology(capsys):
    assert main(["cohomology", "--input", os.path.join(FIX, "rp2.json"),
                 "--ring", "Z", "--degree", "2"]) == 0
    assert "Z/2" in capsys.readouterr().out
    assert main(["cohomology", "--input", "/nonexistent.json"]) == 2


def test_cli_ahss(capsys):
    assert main(["ahss", "--model", os.path.join(FIX, "s3_model.json"),
                 "--h", "5"]) == 0
    assert "Z/5" in capsys.readouterr().out
    assert main(["ahss", "--model", os.path.join(FIX, "su3_even.json"),
                 "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    k1s = {c["K1"] for c in data["candidates"]}
    assert k1s == {"Z/4", "Z/2"}
    assert main(["ahss"]) == 2


def test_cli_deligne_and_series(capsys):
    assert main(["deligne", "--input", os.path.join(FIX, "t3_model.json"),
                 "--n", "3", "--p", "2"]) == 0
    assert "(R/Z)^3" in capsys.readouterr().out
    assert main(["series", "--n", "17"]) == 0
    out = capsys.readouterr().out
    assert "True" in out and "False" not in out


def test_cli_json_reports_are_reproducible(capsys):
    args = ["--seed", "7", "verify", "--id", "L-basic.dC3", "--json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["config"]["seed"] == 7
    assert data["reports"][0]["status"] == "verified"
    assert "seconds" not in data["reports"][0]


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "cochainforge", "series", "--n", "4"],
        capture_output=True, text=True,
        cwd=os.path.join(os.path.dirname(__file__), ".."))
    assert proc.returncode == 0
    assert "P(t)" in proc.stdout
