import os
import pathlib

import pytest

import nullkit

DATA = pathlib.Path(os.environ.get("NULLKIT_TEST_DATA", pathlib.Path(__file__).parents[2] / "tests" / "data"))


def p1():
    return nullkit.Problem("GF(2)", ["X0", "X1"], ["X0"])


def test_problem_round_trip():
    p = nullkit.Problem.load(str(DATA / "tower.null"))
    assert p.coeffs == "GF(2^2)"
    assert p.points == "GF(2)"
    again = nullkit.Problem.parse(p.emit())
    assert again.emit() == p.emit()
    assert again.gens == p.gens


def test_groebner_and_membership():
    p = nullkit.Problem("GF(3)", ["X0", "X1", "X2", "X3"], ["X0*X2 - X1^2", "X1*X3 - X2^2", "X0*X3 - X1*X2"])
    assert len(nullkit.groebner(p)) == 3
    assert nullkit.contains(p, "X0^2*X2 - X0*X1^2")
    assert not nullkit.contains(p, "X0")


def test_worked_example():
    p = p1()
    runs = nullkit.compare(p)
    assert [r["gb"] for r in runs] == [["X0"]] * 3
    assert [r["quotient_rounds"] for r in runs] == [1, 2, 0]
    assert runs[0]["d"] == 2
    cert = nullkit.certificate(p, 1)
    assert cert["g"] == "X0*X1"
    assert cert["l"] == "X0*X1 + X1^2"
    assert nullkit.points(p) == ["[0:1]"]
    assert nullkit.vanishing(p, kind="affine")["gb"] == ["X0", "X1^2 + X1"]


def test_ideal_ops():
    p = p1()
    assert nullkit.ideal_op("intersect", p, ["X1"])["gb"] == ["X0*X1"]
    sat = nullkit.ideal_op("saturate", p, ["X0", "X1"])
    assert sat["gb"] == ["X0"] and sat["iterations"] == 2


def test_search_and_suite():
    p = nullkit.Problem("GF(2)", ["X1", "X2"], ["X1"])
    found = nullkit.search(p, "r1", "X1")
    assert not found["exhausted"] and found["candidates_tested"] == 1
    small = nullkit.search(p, "r3", "X2^2 - X2", bounds="m=1,degp=2,degargs=1")
    assert small["exhausted"] and small["candidates_tested"] > 0
    suite = nullkit.counterexample_suite("m=1,degp=2,degargs=1")
    assert suite["passed"]
    hit = nullkit.find_nonradical(2, 2, 2)
    assert hit is not None and hit["witness"] not in hit["augmented"]


def test_errors_and_cli():
    with pytest.raises(nullkit.NullkitError, match="SyntaxError"):
        nullkit.Problem("GF(2)", ["X0"], ["Y + 1"])
    with pytest.raises(ValueError):
        nullkit.Problem("GF(6)", ["X0"], ["X0"])
    code, out, _ = nullkit.run_cli(["vanishing", "--input", str(DATA / "p1.null")])
    assert code == 0 and out == "X0\n"
    code, _, err = nullkit.run_cli(["gb", "--input", str(DATA / "bad_var.null")])
    assert code == 2 and "line 4" in err
