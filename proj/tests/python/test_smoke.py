from pathlib import Path

import pytest

import galreal

DATA = Path(galreal.data_dir())


def test_canonical_form():
    assert galreal.canonicalize("(x1^2 - 1)/(x1 - 1)") == "x1 + 1"
    assert galreal.evaluate("x1*exp(x2)", {"x1": 2.0, "x2": 0.0}) == pytest.approx(2.0)


def test_catalog_jacobi():
    ids = galreal.algebra_ids()
    assert "A48" in ids
    for i in ids:
        assert galreal.check_algebra(i)["holds"], i


def test_heisenberg_realization():
    text = galreal.realize("AbarG1", str(DATA / "splittings" / "AbarG1_generic.split"))
    assert text == "P = d1\nT = d2\nG = -x2*d1 + d3\n"
    assert galreal.check_relations("AbarG1", text)
    assert not galreal.check_relations("AbarG1", text.replace("-x2", "x2"))


def test_table_suite():
    rep = galreal.verify("table2")
    assert rep["failed"] == 0
    assert rep["passed"] > 0


def test_deformation_limit():
    lim = galreal.deform("AbarG1_q", limit=True)
    assert "[G,T] = P" in lim


def test_burgers_symmetries():
    (rep,) = galreal.check_symmetry(str(DATA / "equations" / "burgers.eq"))
    assert rep["ok"]
    assert rep["algebra_ok"]


def test_errors_are_raised():
    with pytest.raises(galreal.Error):
        galreal.check_algebra("no_such_algebra")
    with pytest.raises(galreal.Error):
        galreal.canonicalize("x1 +* 2")
