import json
import os
import subprocess

import pytest

import orbicurve


def test_invariants():
    assert orbicurve.euler_characteristic(0, 0, [2, 3, 7]) == "-1/42"
    assert orbicurve.kind(0, 0, [2, 3, 6]) == "euclidean"
    assert orbicurve.finite_order(0, 0, [2, 3, 5]) == 60
    assert orbicurve.finite_order(1, 0, []) is None
    assert orbicurve.abelianization(0, 0, [2, 4, 4])["torsion"] == ["2", "4"]


def test_decisions():
    assert orbicurve.isomorphic((1, 1, [2]), (0, 3, [2]))["isomorphic"]
    verdict = orbicurve.serre(0, 0, [2, 3, 12])
    assert verdict["verdict"] == "open"
    assert verdict["degree"] == 6
    assert orbicurve.cover(0, 0, [2, 3, 7], 168)["rho"] == 3


def test_enumeration():
    text = "gens a b\nrel a^2\nrel b^3\nrel a b a b a b\n"
    assert orbicurve.group_order_of_text(text) == 12
    assert orbicurve.group_order_of_text(text, 10) is None


def test_suites():
    assert orbicurve.wallpaper(6, 10, 1)["pass"]
    assert orbicurve.example("quartic-b3p1")["pass"]
    assert orbicurve.triangle_rep(2, 3, 7)["pass"]


def test_errors():
    with pytest.raises(orbicurve.OrbicurveError):
        orbicurve.euler_characteristic(0, 0, [1])
    with pytest.raises(ValueError):
        orbicurve.triangle_rep(2, 3, 6)


def test_run_cli():
    code, out, err = orbicurve.run_cli(["chi", "--sig", '{"g":0,"r":0,"m":[2,3,7]}'])
    assert code == 0
    assert json.loads(out) == {"chi": "-1/42", "kind": "hyperbolic"}
    code, _, err = orbicurve.run_cli(["order", "--sig", '{"g":0}'])
    assert code == 1 and err


@pytest.mark.skipif("ORBICURVE_BIN" not in os.environ, reason="CLI binary path not given")
def test_binary_is_deterministic():
    cmd = [os.environ["ORBICURVE_BIN"], "verify", "wallpaper", "--k", "3", "--samples", "20", "--seed", "9"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second
    assert json.loads(first)["pass"]
