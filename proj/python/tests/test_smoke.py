from fractions import Fraction

import pytest

import fbeta


def test_eta_r_v1():
    assert fbeta.eta_r(2, 1) == "2*t1 + v1"


def test_beta_representative_degree():
    rep = fbeta.beta_representative(2, 1)
    assert rep["degree"] == 10
    assert rep["order_exponent"] == 1


def test_f_beta_matches_closed_form():
    f = fbeta.f_beta(4, 4)
    assert f["degree"] == 16
    assert f["igusa"] == fbeta.closed_form_beta(1, 2)


def test_f_alpha1_alpha():
    assert fbeta.f_alpha1_alpha(3)["igusa"] == "T"


def test_level_one_reduction_is_prime_field():
    f = fbeta.f_beta(1, 1, p=5, orientation="eisenstein", precision=60)
    assert f["level"] == 1
    assert all(b == 0 and 0 <= a < 5 for a, b in f["reduction"])


def test_qexp_delta_level_one():
    # 1728 Delta = E4^3 - E6^2 in the g2, g3 normalization
    coeffs = fbeta.qexp("g2^3 - 27*g3^2", 1, 4)
    assert coeffs[0] == (0, 0)
    assert coeffs[1][1] == 0 and coeffs[1][0] != 0
    assert coeffs[2][0] / coeffs[1][0] == Fraction(-24)


def test_chern_dimension_four():
    assert fbeta.kervaire_chern_polynomial(4) == "c1_0*c1_1"
    assert fbeta.evaluate_manifold(4, {"c1_0*c1_1": 3})["verdict"] == "kervaire-one"
    assert fbeta.evaluate_manifold(4, {"c1_0*c1_1": 2})["verdict"] == "bounds-framed"


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        fbeta.kervaire_chern_polynomial(12)
    with pytest.raises(ValueError):
        fbeta.evaluate_manifold(4, {})


def test_suite_runs():
    assert "eta-r" in fbeta.verify_suites()
    assert all(c["passed"] for c in fbeta.run_suite("eta-r"))
