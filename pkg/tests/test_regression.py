import json
import shutil
from fractions import Fraction

import pytest

from toric_action.exact import MPoly, ratfn_eq
from toric_action.invariants import calB_symbolic, specialize
from toric_action.polytope import DP2
from toric_action.regression import (
    MANDATORY,
    SPECS,
    ConfigurationError,
    check_fixture,
    default_fixture_dir,
    derived_quantity,
    fixture_regression,
    load_fixture,
    write_fixtures,
)


def test_all_packaged_fixtures_pass():
    results = fixture_regression()
    assert {r.name for r in results} == set(SPECS)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_mandatory_set():
    for tag in ("dp2", "dp3"):
        for q in ("V", "F1", "F2", "A", "B", "C"):
            assert f"{tag}_{q}" in MANDATORY
    assert {"dp2_calB", "dp2_a", "dp2_smin"} <= set(MANDATORY)


def test_packaged_fixtures_are_regenerated_bit_exactly(tmp_path):
    write_fixtures(tmp_path)
    for f in default_fixture_dir().glob("*.json"):
        assert (tmp_path / f.name).read_text() == f.read_text()


def test_corrupted_fixture_names_the_monomial(tmp_path):
    src = default_fixture_dir() / "dp2_calB.json"
    rec = json.loads(src.read_text())
    term = rec["numerator"]["terms"][3]
    term["num"] = str(int(term["num"]) + 1)
    bad = tmp_path / "dp2_calB.json"
    bad.write_text(json.dumps(rec))
    res = check_fixture(bad)
    assert not res.passed
    assert res.detail["side"] == "numerator"
    expected_name = str(MPoly.monomial(tuple(term["exp"])))
    assert expected_name in res.detail["monomials"]
    entry = res.detail["monomials"][expected_name]
    assert Fraction(entry["stored"]) != Fraction(entry["expected"])


def test_wrong_pi_power_fails(tmp_path):
    rec = json.loads((default_fixture_dir() / "dp2_a.json").read_text())
    rec["pi_power"] = 1
    p = tmp_path / "dp2_a.json"
    p.write_text(json.dumps(rec))
    assert not check_fixture(p).passed


def test_missing_mandatory_fixture(tmp_path):
    for f in default_fixture_dir().glob("*.json"):
        shutil.copy(f, tmp_path / f.name)
    (tmp_path / "dp2_V.json").unlink()
    with pytest.raises(ConfigurationError, match="dp2_V"):
        fixture_regression(tmp_path)
    with pytest.raises(ConfigurationError):
        fixture_regression(tmp_path / "absent")


def test_unreadable_fixture_is_reported(tmp_path):
    for f in default_fixture_dir().glob("*.json"):
        shutil.copy(f, tmp_path / f.name)
    (tmp_path / "zz_broken.json").write_text("{not json")
    results = {r.name: r for r in fixture_regression(tmp_path)}
    assert not results["zz_broken"].passed


def test_derived_quantity_matches_fixture():
    f, pi = derived_quantity("dp2", "calB")
    assert pi == 0 and ratfn_eq(f, specialize(calB_symbolic(DP2)))
    _, stored = load_fixture(default_fixture_dir() / "dp2_calB.json")
    assert ratfn_eq(f, stored)
    a, pi_a = derived_quantity("dp2", "a")
    assert pi_a == 2
    assert a.eval((0, 1, 1, 1)) == Fraction(-1344, 409)
