import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from growthbound.polyalg import (
    BiPoly,
    MalformedWeightError,
    SPoly,
    clear_denominator,
    discriminant_in_s,
    max_real_root,
    parse_bipoly,
    real_roots,
    resultant_eval_interp,
    resultant_prs,
    series_diagonal,
    upoly,
)
from growthbound.polyalg.resultant import bareiss_det, sylvester

W1 = parse_bipoly("2x^2y + 2xy + y")

small = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-9, 9).filter(bool), max_size=6
).map(BiPoly)


def test_bipoly_basics():
    one_x = BiPoly({(0, 0): 1, (1, 0): 1})
    assert one_x * one_x == BiPoly({(0, 0): 1, (1, 0): 2, (2, 0): 1})
    assert W1 + BiPoly() == W1
    assert (W1 - W1) == BiPoly() and not (W1 - W1)
    sq = (W1 * W1).truncate(10, 2)
    assert sq[(4, 2)] == 4 and sq[(3, 2)] == 8 and sq[(2, 2)] == 8


@given(small, small, small)
def test_bipoly_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p


@given(small)
def test_bipoly_json_round_trip(p):
    assert BiPoly.from_json(p.dumps()) == p
    assert parse_bipoly(str(p)) == p if p else True


def test_json_format():
    data = W1.to_json()
    assert data["vars"] == ["x", "y"] and data["format"] == 1
    assert data["terms"][0] == {"x": 0, "y": 1, "c": "1"}


def test_parse_variants():
    assert parse_bipoly("96x^{18}y^9 +1092x^{17}*y^9") == BiPoly({(18, 9): 96, (17, 9): 1092})
    assert parse_bipoly("y - x") == BiPoly({(0, 1): 1, (1, 0): -1})


def test_series_diagonal_w1():
    assert series_diagonal(W1, 5) == [0, 1, 4, 18, 80, 360]


def test_series_diagonal_against_brute_force():
    n = 6
    x_over = BiPoly({(1, 0): 1})
    total, power = BiPoly(), BiPoly({(0, 0): 1})
    for _ in range(n + 1):
        total = total + power
        power = (power * W1).truncate(2 * n, n)
    series = (x_over * total).truncate(n, n)
    assert series_diagonal(W1, n) == [series[(k, k)] for k in range(n + 1)]


def test_series_needs_no_constant():
    with pytest.raises(ValueError):
        series_diagonal(BiPoly({(0, 0): 1}), 3)


def test_clear_denominator():
    d = clear_denominator(W1)
    # s - z - 2zs - 2zs^2
    assert d.coeffs == ((0, -1), (1, -2), (0, -2))
    assert d.degree == 2
    w3 = parse_bipoly("y + 4xy + 7x^2y + 4x^3y + x^4y")
    assert clear_denominator(w3).degree == 4  # 1 + max(a - b) = 1 + 3
    with pytest.raises(MalformedWeightError):
        clear_denominator(BiPoly({(0, 2): 1}))


def test_discriminant_w1():
    d = clear_denominator(W1)
    assert discriminant_in_s(d) == [1, -4, -4]
    assert discriminant_in_s(d, "eval") == [1, -4, -4]


def test_discriminant_textbook():
    # s^2 - z
    d = SPoly(((0, -1), (), (1,)))
    assert discriminant_in_s(d) == [0, 4]
    with pytest.raises(ValueError):
        discriminant_in_s(SPoly(((1,), (1,))))


def _random_spoly(rng, deg_s, deg_z):
    coeffs = [tuple(rng.randint(-5, 5) for _ in range(deg_z + 1)) for _ in range(deg_s + 1)]
    coeffs[-1] = coeffs[-1][:-1] + (rng.choice([-3, -1, 1, 2]),)
    return SPoly(tuple(coeffs))


def test_resultant_routes_agree_with_sylvester():
    rng = random.Random(7)
    for _ in range(25):
        a = _random_spoly(rng, rng.randint(1, 4), rng.randint(0, 3))
        b = _random_spoly(rng, rng.randint(1, 3), rng.randint(0, 3))
        prs = resultant_prs(a, b)
        assert upoly.trim(prs) == upoly.trim(resultant_eval_interp(a, b))
        for z in (-2, 0, 3):
            det = bareiss_det(sylvester(a.at(z), b.at(z)))
            assert upoly.evaluate(prs, z) == det


def test_discriminant_routes_agree(weights):
    for i in (2, 5, 8):
        d = clear_denominator(weights(2, i).poly).primitive()
        assert discriminant_in_s(d, "prs") == discriminant_in_s(d, "eval")


def test_real_roots_quadratic():
    roots = real_roots([1, -4, -4], digits=20)
    assert len(roots) == 2
    r = roots[-1]
    # (sqrt 2 - 1) / 2, i.e. (2r + 1)^2 = 2
    assert (2 * r.lo + 1) ** 2 < 2 < (2 * r.hi + 1) ** 2
    assert r.width <= r.lo / 10**20
    assert roots[0].hi < Fraction("-1.207") and roots[0].lo > Fraction("-1.2072")
    top = max_real_root([1, -4, -4])
    assert top.lo <= r.hi and r.lo <= top.hi


def test_real_roots_edge_cases():
    assert real_roots([1, 0, 1]) == []
    (r,) = real_roots([1, -2, 1])
    assert r.contains(1)
    with pytest.raises(ValueError):
        real_roots([])
    assert [iv.mid for iv in real_roots([0, -1, 0, 1])] == [-1, 0, 1]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_root_intervals_bracket_sign_changes(rs):
    p = [1]
    for r in rs:
        p = upoly.mul(p, [-r, 1])
    roots = real_roots(p, digits=12)
    assert len(roots) == len(set(rs))
    for iv, r in zip(roots, sorted(set(rs))):
        assert iv.contains(r)


def test_upoly_helpers():
    p = [2, 0, -3, 1]
    assert upoly.evaluate(upoly.taylor_shift(p, 2), 1) == upoly.evaluate(p, 3)
    assert upoly.derivative(p) == [0, -6, 3]
    q, r = [1, 1], [3, -1, 2]
    assert upoly.exact_div(upoly.mul(q, r), q) == r
    with pytest.raises(ArithmeticError):
        upoly.exact_div([1, 0, 1], [1, 1])
    assert upoly.is_squarefree([1, -4, -4]) and not upoly.is_squarefree([1, -2, 1])
    assert upoly.interpolate_consecutive([upoly.evaluate(p, k) for k in range(4)]) == p
