import json
import random
from fractions import Fraction

import pytest

from toric_action.certify import (
    Certificate,
    WitnessForm,
    calB_parts,
    comparison_forms,
    dominance_certificate,
    homogenization_check,
    numeric_spotcheck_B,
    random_params,
    verify_B_bound,
    verify_scalar_positivity,
)
from toric_action.errors import NotVerified
from toric_action.exact import MPoly
from toric_action.invariants import calB, vertex_values
from toric_action.polytope import DP2, DP3
from toric_action.published import PRINTED
from toric_action.regression import SPECS, check_fixture, default_fixture_dir


def _Q(kind):
    total = MPoly()
    for w in comparison_forms(kind):
        total = total + w.polynomial()
    return total


def test_comparison_polynomials_are_the_printed_ones():
    assert _Q(DP2) == MPoly.parse("4*(g**2 - g**4 + g**6 + b**2 - b**4 + b**6)")
    assert _Q(DP3) == MPoly.parse("4*(a**2 - a**4 + a**6 + b**2 - b**4 + b**6 + g**2 - g**4 + g**6)")
    assert all(w.is_whitelisted() for w in comparison_forms(DP3))


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_B_bound_certificates_verify(kind):
    cert = verify_B_bound(kind)
    assert cert.verified, cert.details
    assert cert.residual.min_coefficient() >= 0
    assert cert.recheck()
    N, D = calB_parts(kind)
    assert cert.target == D - 4 * N
    if kind is DP3:
        assert cert.details["delta_squared_divides_numerator"]


def test_dp2_residual_is_printed_difference_minus_Q():
    cert = verify_B_bound(DP2)
    assert cert.residual == MPoly.parse(PRINTED["dp2_up1_diff"]) - _Q(DP2)


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_certificate_round_trips_through_json(kind):
    cert = verify_B_bound(kind)
    again = Certificate.from_record(json.loads(cert.to_json()))
    assert again.verified
    assert again.residual == cert.residual


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_mutations_fail(kind):
    # a bound that the coefficients cannot carry
    assert not verify_B_bound(kind, bound_multiplier=5).verified
    # Q added instead of subtracted: negative multipliers leave the whitelist
    neg = [WitnessForm(w.shape, w.data, -w.multiplier) for w in comparison_forms(kind)]
    bad = verify_B_bound(kind, forms=neg)
    assert not bad.verified and "bad_forms" in bad.details
    # one corrupted coefficient of the numerator
    N, D = calB_parts(kind)
    e, c = N.sorted_terms()[0]
    N_bad = N + MPoly.monomial(e, 10 ** 6)
    cert = dominance_certificate("corrupted", D - 4 * N_bad, comparison_forms(kind))
    assert not cert.verified
    assert str(e) in cert.details["negative_terms"]
    with pytest.raises(NotVerified):
        cert.require()
    # a form outside the whitelist
    assert not WitnessForm("cubic", "beta").is_whitelisted()


def test_smaller_multiplier_still_verifies():
    # D - 3N - Q >= 0 holds too: it certifies the weaker bound calB < 1/3,
    # so it is not a falsification of the checker.
    assert verify_B_bound(DP2, bound_multiplier=3).verified
    assert verify_B_bound(DP3, bound_multiplier=3).verified


def test_tampered_certificate_fails_recheck():
    rec = verify_B_bound(DP2).to_record()
    rec["residual"]["terms"][0]["num"] = str(int(rec["residual"]["terms"][0]["num"]) + 1)
    assert not Certificate.from_record(rec).verified


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_scalar_positivity(kind):
    rep = verify_scalar_positivity(kind)
    assert rep.verified
    assert len(rep.vertices) == (5 if kind is DP2 else 6)
    assert all(v["degrees"] == [9, 10] and v["homogeneous"] for v in rep.vertices)
    with pytest.raises(NotVerified):
        verify_scalar_positivity(kind, negate=True).require()


def test_dp2_lower_bound_fixture():
    assert check_fixture(default_fixture_dir() / "dp2_smin.json").passed
    assert SPECS["dp2_smin"].mandatory


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_homogenization(kind):
    rep = homogenization_check(kind)
    assert rep["ok"]
    assert all(v["degrees"] == [9, 10] and v["top_terms"] for v in rep["vertices"])


@pytest.mark.parametrize("kind", [DP2, DP3])
def test_numeric_spotcheck(kind):
    rep = numeric_spotcheck_B(kind, 1000, seed=1)
    assert rep.all_pass and rep.max_calB < Fraction(1, 4)
    assert numeric_spotcheck_B(kind, 50, seed=1).max_calB == numeric_spotcheck_B(kind, 50, seed=1).max_calB


def test_spotcheck_on_delta_zero():
    rep = numeric_spotcheck_B(DP3, 200, seed=2, delta="zero")
    assert rep.max_calB == 0


def test_random_params_stay_in_cone_and_cover_negative_delta():
    rng = random.Random(5)
    ds = [random_params(DP3, rng).delta for _ in range(300)]
    assert any(d < 0 for d in ds) and any(d > 0 for d in ds)


def test_vertex_values_positive_at_random_points():
    rng = random.Random(6)
    for kind in (DP2, DP3):
        for _ in range(100):
            p = random_params(kind, rng)
            assert all(v.coeff > 0 for v in vertex_values(kind, p))
            assert 0 <= calB(kind, p) < Fraction(1, 4)
