import json
import math
import os
import subprocess

import pytest

import giant_lambda as gl


def test_small_atom_optimum():
    p = gl.ModelParams.from_ratio(1.0, 1.0, 0.0, 2 * math.pi)
    a = gl.giant_lambda_amplitudes(p, 0.0)
    assert a.Tc == pytest.approx(0.5, abs=1e-10)
    assert a.T1 + a.R1 + a.Tc == pytest.approx(1.0, abs=1e-12)
    s = gl.sagnac_amplitudes(p, 0.0)
    assert s.Tc_tilde == pytest.approx(1.0, abs=1e-10)


def test_solver_matches_closed_form():
    p = gl.ModelParams(0.7, 1.3, 1.1, -2.4, 0.2)
    a = gl.giant_lambda_amplitudes(p, 0.9)
    s = gl.solve_giant(p, 0.9)
    for key in ("t1", "r1", "t2", "r2"):
        assert abs(s[key] - getattr(a, key)) < 1e-12
    assert s["max_residual"] < 1e-12


def test_singular_point():
    p = gl.ModelParams.from_ratio(1.0, 1.0, math.pi, 0.0)
    with pytest.raises(gl.SingularPointError):
        gl.giant_lambda_amplitudes(p, 0.0)
    assert issubclass(gl.SingularPointError, ValueError)


def test_invalid_params():
    with pytest.raises(ValueError):
        gl.ModelParams(-1.0, 1.0, 0.0, 0.0, 0.0)


def test_effective_and_conditions():
    e = gl.effective_params(gl.ModelParams.from_ratio(1.0, 1.0, 0.0, 2 * math.pi))
    assert e["gamma1_eff"] == pytest.approx(4.0)
    assert e["delta_shift"] == pytest.approx(0.0, abs=1e-12)
    r = gl.analyze(math.pi, 0.5)
    assert r["fipt"] and r["optimal_conversion"] is None
    r = gl.analyze(0.0, math.pi)
    assert r["total_reflection"] == pytest.approx(0.0, abs=1e-12)


def test_sweep_shapes():
    r = gl.sweep("delta-eta", 0.0, 2 * math.pi, delta_axis=(-4.0, 4.0, 11), scan_axis=(0.0, 4.0, 7), sagnac=True)
    assert r["Tc"].shape == (11, 7)
    assert r["Tc_tilde"].shape == (11, 7)
    assert r["undefined_cells"] == 0
    assert float(r["Tc"].max()) <= 0.5 + 1e-12
    with pytest.raises(ValueError):
        gl.sweep("bogus", 0.0, 1.0)


def test_version():
    assert gl.__version__ == "0.1.0"


@pytest.mark.skipif("GLS_CLI_PATH" not in os.environ, reason="CLI path not provided")
def test_cli_amplitudes():
    out = subprocess.run(
        [os.environ["GLS_CLI_PATH"], "amplitudes", "--phi1", "0", "--dphi", "6.283185307179586", "--delta", "0"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    data = json.loads(out)
    assert data["Tc"] == pytest.approx(0.5, abs=1e-10)
