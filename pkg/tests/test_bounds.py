import json
from decimal import Decimal
from fractions import Fraction
from math import e, sqrt

import pytest

from growthbound.bounds import (
    BoundResult,
    MethodFailure,
    closed_form_2d,
    diagonal_radius_bound,
    eden_bound,
    general_bound,
    general_weight_formula,
    lower_bound_from_count,
    multinomial_bound,
    ratio_estimate,
)
from growthbound.oracle import count_fixed
from growthbound.polyalg import BiPoly

TOL = Decimal("1e-9")


def test_eden():
    assert eden_bound(2).exact == Fraction(27, 4)
    assert eden_bound(2).printed() == "6.750000000"
    assert eden_bound(3).exact == Fraction(3125, 256)
    for d in range(2, 11):
        assert float(eden_bound(d)) < (2 * d - 1) * e
    with pytest.raises(ValueError):
        eden_bound(1)


def test_closed_form_2d():
    v = closed_form_2d().value
    assert abs(v - Decimal("4.828427124")) <= TOL
    assert abs(v * v - 4 * v - 4) < Decimal("1e-25")


def test_general_weight_formula():
    assert general_weight_formula(2) == BiPoly({(0, 1): 1, (1, 1): 2, (2, 1): 2})
    assert general_weight_formula(3) == BiPoly({(0, 1): 1, (1, 1): 4, (2, 1): 7, (3, 1): 4, (4, 1): 1})
    for d in range(2, 8):
        assert general_weight_formula(d).evaluate(1, 1) == 2 ** (2 * (d - 1)) + 1


def test_multinomial_bound():
    r = multinomial_bound(3)
    assert abs(r.value - Decimal("9.807295572")) <= Decimal("1e-8")
    assert abs(Decimal(r.certificate["b0"]) - Decimal("1.274306378")) <= Decimal("1e-6")
    assert abs(Decimal(r.certificate["f_b0"]) - Decimal("2.451823893")) <= Decimal("1e-8")
    assert abs(multinomial_bound(4).value - Decimal("15.1284")) <= Decimal("5e-4")
    assert multinomial_bound(3, b=1).exact == Fraction(641, 64)
    # any other b gives a weaker bound
    for b in (Fraction(1), Fraction(5, 4), Fraction(13, 10)):
        assert multinomial_bound(3, b=b).value >= r.value
    with pytest.raises(ValueError):
        multinomial_bound(2)


def test_general_bound():
    assert abs(general_bound(3).value - (4 * Decimal(1).exp() + Decimal("0.25"))) <= TOL
    assert abs(float(general_bound(2)) - (2 * e + 0.5)) < 1e-12
    for d in range(2, 11):
        assert float(general_bound(d)) < (2 * d - 1) * e


def test_diagonal_radius_w1():
    r = diagonal_radius_bound(general_weight_formula(2), d=2, i=1)
    assert abs(r.value - closed_form_2d().value) <= TOL
    root = r.certificate["root"]
    assert root.lo <= Fraction(sqrt(2) - 1) / 2 + Fraction(1, 10**15)
    assert r.certificate["discriminant_degree"] == 2


def test_diagonal_radius_3d_formula():
    r = diagonal_radius_bound(general_weight_formula(3), d=3)
    assert abs(r.value - Decimal("9.807295572")) <= TOL


@pytest.mark.parametrize("i,expected", [(5, "4.765532996"), (8, "4.695386599")])
def test_diagonal_radius_2d(weights, i, expected):
    r = diagonal_radius_bound(weights(2, i).poly, d=2, i=i)
    assert abs(r.value - Decimal(expected)) <= TOL
    assert diagonal_radius_bound(weights(2, i).poly, method="eval").value == r.value


def test_diagonal_radius_3d(weights):
    r = diagonal_radius_bound(weights(3, 3).poly, d=3, i=3)
    assert abs(r.value - Decimal("9.701430690")) < Decimal("5e-9")


def test_cross_check(weights):
    r = diagonal_radius_bound(weights(2, 4).poly, cross_check=40)
    assert Decimal(r.certificate["ratio_estimate"]["value"]) < r.value


def test_method_failure():
    with pytest.raises(MethodFailure):
        diagonal_radius_bound(BiPoly({(0, 1): 1}))
    with pytest.raises(ValueError):
        diagonal_radius_bound(BiPoly({(1, 1): -1}))


def test_ratio_estimate():
    w1 = general_weight_formula(2)
    r100, r200 = ratio_estimate(w1, 100), ratio_estimate(w1, 200)
    assert r100.direction == "estimate"
    assert Decimal("4.5") < r100.value < Decimal("4.8285")
    assert r100.value < r200.value
    assert abs(r200.value - Decimal("4.8284")) / Decimal("4.8284") < Decimal("0.05")
    assert ratio_estimate(general_weight_formula(3), 60).value < Decimal("9.807295572")
    with pytest.raises(ValueError):
        ratio_estimate(w1, 5)


def test_lower_bounds():
    assert abs(lower_bound_from_count(3, 19, 651459315795897).value - Decimal("6.3795")) <= Decimal("5e-4")
    assert lower_bound_from_count(2, 1, 1).value == 2
    a10 = count_fixed(2, 10)[10]
    assert lower_bound_from_count(2, 10, a10).value < Decimal("4.828427")
    with pytest.raises(ValueError):
        lower_bound_from_count(2, 0, 5)


def test_consistency_ladder_3d(weights):
    diag = [diagonal_radius_bound(weights(3, i).poly, d=3).value for i in range(1, 4)]
    est = ratio_estimate(weights(3, 1).poly, 40).value
    assert est < diag[-1]
    assert diag[0] <= multinomial_bound(3).value + Decimal("1e-9")
    assert multinomial_bound(3).value <= general_bound(3).value <= eden_bound(3).value


def test_sanity_floor(weights):
    for i in range(1, 8):
        assert diagonal_radius_bound(weights(2, i).poly).value >= 3
    for i in range(1, 4):
        assert diagonal_radius_bound(weights(3, i).poly).value >= 6


def test_report_json():
    rep = multinomial_bound(3).to_json()
    assert rep["method"] == "multinomial_b" and rep["value"].startswith("9.80729557")
    json.dumps(rep)
    with pytest.raises(ValueError):
        BoundResult(Decimal(1), "upper", "guess", 2)
