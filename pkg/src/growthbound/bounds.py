"""Numeric bounds on the growth constants: closed forms, the diagonal radius, estimates."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import comb

from .polyalg import BiPoly, clear_denominator, discriminant_in_s, max_real_root, series_diagonal
from .polyalg import upoly

PRECISION = 30  # internal decimal digits
PRINTED = 9

METHODS = (
    "eden",
    "closed2d",
    "multinomial_b",
    "general_d",
    "diagonal_radius",
    "ratio_estimate",
    "lower_count",
)


class MethodFailure(ArithmeticError):
    """The method produced no usable value (reported, never guessed)."""


@dataclass(frozen=True)
class BoundResult:
    value: Decimal
    direction: str  # "upper", "lower" or "estimate"
    method: str
    d: int | None
    i: int | None = None
    precision: int = PRECISION
    exact: Fraction | None = None
    certificate: dict = field(default_factory=dict)
    runtime_ms: float = 0.0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.direction not in ("upper", "lower", "estimate"):
            raise ValueError(f"unknown direction {self.direction!r}")

    def printed(self, places: int = PRINTED) -> str:
        with localcontext() as ctx:
            ctx.prec = self.precision + 10
            q = self.value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
        return f"{q:f}"

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        cert = _jsonable(self.certificate)
        out = {
            "format": 1,
            "method": self.method,
            "direction": self.direction,
            "d": self.d,
            "i": self.i,
            "value": self.printed(),
            "value_full": str(self.value),
            "precision": self.precision,
            "certificate": cert,
            "runtime_ms": round(self.runtime_ms, 3),
        }
        if self.exact is not None:
            out["exact"] = str(self.exact)
        return out


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str)) or v is None:
        return v
    return str(v)


def _dec(q: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return Decimal(q.numerator) / Decimal(q.denominator)


def _check_d(d: int, least: int):
    if not isinstance(d, int) or d < least:
        raise ValueError(f"d must be an integer >= {least}, got {d!r}")


def eden_bound(d: int, digits: int = PRECISION) -> BoundResult:
    """``(2d-1)^(2d-1) / (2d-2)^(2d-2)``."""
    _check_d(d, 2)
    q = Fraction((2 * d - 1) ** (2 * d - 1), (2 * d - 2) ** (2 * d - 2))
    return BoundResult(_dec(q, digits), "upper", "eden", d, precision=digits, exact=q)


def closed_form_2d(digits: int = PRECISION) -> BoundResult:
    """``2(1 + sqrt 2)``, the largest root of ``v^2 - 4v - 4``."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = 2 * (1 + Decimal(2).sqrt())
    return BoundResult(v, "upper", "closed2d", 2, 1, digits, certificate={"minimal_polynomial": [-4, -4, 1]})


def general_weight_formula(d: int) -> BiPoly:
    """``y ((x + 1)^(2(d-1)) + x^2)``: the weight sum of the d-dimensional twig set."""
    _check_d(d, 2)
    a = 2 * (d - 1)
    terms = {(k, 1): comb(a, k) for k in range(a + 1)}
    terms[(2, 1)] += 1
    return BiPoly(terms)


def _f_terms(d: int) -> list[tuple[int, Fraction]]:
    """``f_d(b)`` as ``[(power of b, coefficient)]``."""
    a = 2 * (d - 1)
    out = [(-1, Fraction(1)), (0, Fraction(1)), (1, Fraction(comb(a, 2) + 1, a * a))]
    out += [(j - 1, Fraction(comb(a, j), a**j)) for j in range(3, a + 1)]
    return out


def _eval_terms(terms, b):
    return sum(c * b**p for p, c in terms)


def multinomial_bound(d: int, b: Fraction | int | None = None, digits: int = PRECISION) -> BoundResult:
    """``2(d-1) * min_b f_d(b)``, or ``2(d-1) f_d(b)`` at a given ``b``.

    ``f_d`` is ``1/b`` plus a polynomial with positive coefficients, hence
    convex on ``b > 0``; the minimiser is found by bisection on ``f_d'``.
    """
    _check_d(d, 3)
    start = time.perf_counter()
    a = 2 * (d - 1)
    terms = _f_terms(d)
    if b is not None:
        b = Fraction(b)
        if b <= 0:
            raise ValueError("b must be positive")
        q = a * _eval_terms(terms, b)
        return BoundResult(
            _dec(q, digits), "upper", "multinomial_b", d, precision=digits, exact=q,
            certificate={"b": str(b), "f_b": str(q / a)},
            runtime_ms=(time.perf_counter() - start) * 1e3,
        )
    deriv = [(p - 1, c * p) for p, c in terms if p != 0]
    with localcontext() as ctx:
        ctx.prec = digits + 15
        dterms = [(p, Decimal(c.numerator) / c.denominator) for p, c in deriv]
        fterms = [(p, Decimal(c.numerator) / c.denominator) for p, c in terms]
        lo, hi = Decimal("0.01"), Decimal(1)
        while _eval_terms(dterms, hi) < 0:
            hi *= 2
        tol = Decimal(10) ** -(digits + 5)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if _eval_terms(dterms, mid) < 0:
                lo = mid
            else:
                hi = mid
        b0 = (lo + hi) / 2
        fb = _eval_terms(fterms, b0)
        value = a * fb
    return BoundResult(
        +value, "upper", "multinomial_b", d, precision=digits,
        certificate={"b0": str(b0), "f_b0": str(fb)},
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


def general_bound(d: int, digits: int = PRECISION) -> BoundResult:
    """``(2d-2) e + 1/(2d-2)``."""
    _check_d(d, 2)
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = (2 * d - 2) * Decimal(1).exp() + Decimal(1) / (2 * d - 2)
    return BoundResult(v, "upper", "general_d", d, precision=digits)


def _check_weight(w: BiPoly):
    if not w:
        raise ValueError("empty weight polynomial")
    for (a, b), c in w.items():
        if c <= 0:
            raise ValueError(f"coefficient of x^{a} y^{b} is not positive")


def diagonal_radius_bound(
    w: BiPoly,
    digits: int = PRECISION,
    d: int | None = None,
    i: int | None = None,
    method: str = "prs",
    cross_check: int | None = None,
) -> BoundResult:
    """``1 / z*`` where ``z*`` is the largest real root of ``disc_s D(s, z)``.

    With ``cross_check = N`` the ratio estimate at ``N`` is computed as well
    and stored in the certificate; an estimate above the bound raises.
    """
    _check_weight(w)
    start = time.perf_counter()
    dpoly = clear_denominator(w).primitive()
    if dpoly.degree < 2:
        raise MethodFailure("the cleared denominator is linear in s; there is no branch point")
    disc = upoly.primitive(discriminant_in_s(dpoly, method))
    root = max_real_root(disc, digits + 5)
    if root is None or root.hi <= 0:
        raise MethodFailure("the discriminant has no positive real root")
    if root.lo <= 0:
        raise MethodFailure("the largest root could not be separated from zero")
    value = _dec(1 / root.mid, digits)
    cert = {
        "discriminant_degree": upoly.degree(disc),
        "discriminant_digits": max(len(str(abs(c))) for c in disc),
        "root": root,
        "bound_interval": {"lo": str(1 / root.hi), "hi": str(1 / root.lo)},
    }
    if cross_check is not None:
        est = ratio_estimate(w, cross_check)
        cert["ratio_estimate"] = {"N": cross_check, "value": est.printed()}
        if est.value > value:
            raise MethodFailure(f"ratio estimate {est.printed()} exceeds the bound {value}")
    return BoundResult(
        value, "upper", "diagonal_radius", d, i, digits, certificate=cert,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


def ratio_estimate(w: BiPoly, n: int, digits: int = PRECISION) -> BoundResult:
    """``c(N, N)^(1/N)``: an estimate of the growth rate, not a bound."""
    if n < 10:
        raise ValueError("N must be at least 10")
    c = series_diagonal(w, n)[n]
    if c <= 0:
        raise MethodFailure(f"diagonal coefficient at N={n} is {c}")
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = (Decimal(c).ln() / n).exp()
    return BoundResult(v, "estimate", "ratio_estimate", None, n, digits, certificate={"coefficient": str(c)})


def lower_bound_from_count(d: int, n: int, count: int, digits: int = PRECISION) -> BoundResult:
    """``(d A_d(n))^(1/n)``."""
    if d < 1 or n < 1 or count < 1:
        raise ValueError("d, n and the count must be positive")
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = (Decimal(d * count).ln() / n).exp()
    return BoundResult(v, "lower", "lower_count", d, n, digits, certificate={"count": str(count)})


# Eden's bound improves to about (2d - 1.5) e with a finer count; no derivation
# is available for it, so it is kept as a note rather than a method.
EDEN_REFINED_NOTE = "(2d - 1.5) e"
