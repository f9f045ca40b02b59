import json
import os
from pathlib import Path

import pytest

import homcoh

FIXTURES = Path(os.environ.get("HOMCOH_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def degree(summary, n):
    return next(d for d in summary["degrees"] if d["n"] == n)


def test_validate_algebra_and_morphism():
    assert homcoh.validate(FIXTURES / "A3.json")["valid"]
    phi = homcoh.validate(FIXTURES / "PHI.json")
    assert phi["source"]["valid"] and phi["target"]["valid"] and phi["morphism"]["valid"]


def test_validate_reports_jacobi_defect():
    r = homcoh.validate(FIXTURES / "G2.json")
    assert not r["valid"]
    assert r["failure"] == "hom-jacobi"


def test_dict_input_matches_file():
    doc = json.loads((FIXTURES / "A3.json").read_text())
    assert homcoh.cohomology(doc, 2) == homcoh.cohomology(FIXTURES / "A3.json", 2)


def test_cohomology_dims():
    assert degree(homcoh.cohomology(FIXTURES / "A3.json", 2), 2)["dim_H"] == 0
    b2 = degree(homcoh.cohomology(FIXTURES / "B2.json", (1, 2)), 2)
    assert (b2["dim_C"], b2["dim_Z"], b2["dim_B"], b2["dim_H"]) == (4, 2, 2, 0)
    assert degree(homcoh.cohomology(FIXTURES / "L4A.json", 2), 2)["dim_H"] == 0


def test_invalid_algebra_needs_force():
    with pytest.raises(homcoh.HomcohError):
        homcoh.cohomology(FIXTURES / "G2.json", 2)
    assert homcoh.cohomology(FIXTURES / "G2.json", 2, force=True)["degrees"]


def test_morphism_cohomology_values():
    r = homcoh.morphism_cohomology(FIXTURES / "PHI12_2.json", 1)
    assert degree(r["values"], 1)["dim_H"] == 2


def test_deformations():
    assert not homcoh.deform_check(FIXTURES / "MDEF2.json")["algebra_b_ok"]
    assert homcoh.deform_check(FIXTURES / "DEF_G1.json")["ok"]
    ext = homcoh.deform_extend(FIXTURES / "A3_def1.json", to_order=3)
    assert ext["extended"] and ext["reverified"]
    stuck = homcoh.deform_extend(FIXTURES / "stuck_lie.json")
    assert not stuck["extended"] and stuck["failing_order"] == 2


def test_parse_error():
    with pytest.raises(homcoh.ParseError):
        homcoh.validate({"name": "x"})


def test_selftest_deterministic():
    a = homcoh.selftest()
    assert a["passed"]
    assert a == homcoh.selftest()
