"""Resultants and discriminants with respect to ``s`` of polynomials over ``Z[z]``.

Two independent routes:

* the subresultant remainder sequence, run over a coefficient ring given as a
  small table of operations (plain integers or ``Z[z]``);
* evaluation at consecutive integers ``z = 0, 1, ...``, a Bareiss
  fraction-free determinant of the Sylvester matrix at each point, and Newton
  interpolation back to ``Z[z]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import upoly
from .spoly import SPoly


@dataclass(frozen=True)
class Ring:
    zero: object
    one: object
    add: Callable
    sub: Callable
    mul: Callable
    div: Callable  # exact division
    is_zero: Callable
    neg: Callable


def _int_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact integer division")
    return q


INTEGERS = Ring(
    0, 1,
    lambda a, b: a + b,
    lambda a, b: a - b,
    lambda a, b: a * b,
    _int_div,
    lambda a: a == 0,
    lambda a: -a,
)

POLYS_Z = Ring(
    [], [1],
    upoly.add,
    upoly.sub,
    upoly.mul,
    upoly.exact_div,
    lambda a: not a,
    upoly.neg,
)


def _trim(p: list, R: Ring) -> list:
    p = list(p)
    while p and R.is_zero(p[-1]):
        p.pop()
    return p


def _pow(a, e: int, R: Ring):
    out = R.one
    while e:
        if e & 1:
            out = R.mul(out, a)
        e >>= 1
        if e:
            a = R.mul(a, a)
    return out


def _prem(a: list, b: list, R: Ring) -> list:
    db = len(b) - 1
    e = len(a) - len(b) + 1
    if e <= 0:
        return list(a)
    lb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [R.mul(lb, v) for v in r]
        for j, v in enumerate(b):
            r[k + j] = R.sub(r[k + j], R.mul(c, v))
        r = _trim(r, R)
        e -= 1
    if e:
        f = _pow(lb, e, R)
        r = [R.mul(f, v) for v in r]
    return r


def subresultant_resultant(a: list, b: list, R: Ring):
    """Resultant of two polynomials with coefficients in ``R`` (lowest degree first).

    Subresultant algorithm without the initial content extraction.
    """
    a, b = _trim(a, R), _trim(b, R)
    if not a or not b:
        return R.zero
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            s = -1
    g, h = R.one, R.one
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            break
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b, R)
        if not r:
            return R.zero
        a = b
        den = R.mul(g, _pow(h, delta, R))
        b = [R.div(v, den) for v in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = R.div(_pow(g, delta, R), _pow(h, delta - 1, R))
    da = len(a) - 1
    if da == 0:
        out = R.one
    else:
        out = R.div(_pow(b[-1], da, R), _pow(h, da - 1, R))
    return out if s == 1 else R.neg(out)


def subresultant_gcd(a: list, b: list, R: Ring) -> list:
    """Last nonzero element of the subresultant sequence: a gcd up to a scalar factor."""
    a, b = _trim(a, R), _trim(b, R)
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    g, h = R.one, R.one
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b, R)
        if not r:
            return b
        if len(r) == 1:
            return [R.one]
        a = b
        den = R.mul(g, _pow(h, delta, R))
        b = [R.div(v, den) for v in r]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = R.div(_pow(g, delta, R), _pow(h, delta - 1, R))


def bareiss_det(m: list) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def sylvester(a: list, b: list) -> list:
    """Sylvester matrix for formal degrees ``len(a)-1`` and ``len(b)-1``."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for k in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(a)):
            row[k + j] = c
        rows.append(row)
    for k in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(b)):
            row[k + j] = c
        rows.append(row)
    return rows


def resultant_eval_interp(a: SPoly, b: SPoly) -> list:
    """``Res_s(a, b)`` in ``Z[z]`` by evaluation at ``z = 0..N`` and interpolation.

    The formal s-degrees are kept at every point, so the determinant is the
    specialisation of the generic resultant even where a leading coefficient
    vanishes.
    """
    m, n = a.degree, b.degree
    bound = n * a.zdegree + m * b.zdegree
    values = []
    for z in range(bound + 1):
        values.append(bareiss_det(sylvester(a.at(z), b.at(z))))
    return upoly.interpolate_consecutive(values)


def resultant_prs(a: SPoly, b: SPoly) -> list:
    return subresultant_resultant(list(a.coeffs), list(b.coeffs), POLYS_Z)


def discriminant_in_s(d: SPoly, method: str = "prs") -> list:
    """``(-1)^(n(n-1)/2) Res_s(D, dD/ds) / lc_s(D)`` as an integer polynomial in ``z``."""
    n = d.degree
    if n < 2:
        raise ValueError(f"discriminant needs s-degree >= 2, got {n}")
    dp = d.derivative()
    if method == "prs":
        res = resultant_prs(d, dp)
    elif method == "eval":
        res = resultant_eval_interp(d, dp)
    else:
        raise ValueError(f"unknown resultant method {method!r}")
    disc = upoly.exact_div(res, d.lc)
    return upoly.neg(disc) if (n * (n - 1) // 2) % 2 else disc
