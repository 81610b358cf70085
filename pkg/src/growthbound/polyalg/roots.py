"""Real root isolation and refinement for integer polynomials, in exact rationals.

Isolation is the Descartes bisection method on ``(0, 1)`` after scaling the
positive roots into the unit interval; negative roots are handled through
``p(-z)``.  Refinement is plain bisection on the sign of the square-free part.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import upoly


@dataclass(frozen=True)
class RootInterval:
    """A real root ``lo <= r <= hi``; ``lo == hi`` means the root is exactly rational."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, digits: int = 30) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            return Decimal(self.mid.numerator) / Decimal(self.mid.denominator)

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


def positive_root_bound(p: list) -> int:
    """A power of two exceeding every positive root (Cauchy's bound, rounded up)."""
    lead = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    bound = 1 + -(-m // lead)
    k = 1
    while k < bound:
        k *= 2
    return k


def _descartes01(f: list) -> int:
    """Upper bound (exact parity) on the number of roots of ``f`` in ``(0, 1)``."""
    return upoly.sign_variations(upoly.taylor_shift(upoly.reverse(f), 1))


class _TooDeep(Exception):
    pass


def _isolate_unit(f: list, largest_only: bool, max_depth: int | None = None):
    """Roots of squarefree ``f`` in ``(0, 1)`` as (num, den) exact points or dyadic intervals.

    Intervals ``(c/2^k, (c+1)/2^k)`` are returned as ``(c, k, False)``;
    exact roots at ``c/2^k`` as ``(c, k, True)``.
    """
    found = []
    # right child pushed last so it is explored first: roots come out in descending order
    stack = [(f, 0, 0)]
    while stack:
        g, c, k = stack.pop()
        if g is None:
            found.append((c, k, True))
            if largest_only:
                return found
            continue
        if g[0] == 0:
            # a root at the left end c/2^k (a bisection point, never 0 itself);
            # it is reported once everything to its right has been explored
            while g[0] == 0:
                g = g[1:]
            stack.append((None, c, k))
        v = _descartes01(g)
        if v == 0:
            continue
        if v == 1:
            found.append((c, k, False))
            if largest_only:
                return found
            continue
        if max_depth is not None and k >= max_depth:
            raise _TooDeep
        left = upoly.scale_var(g, 1, 2)
        right = upoly.taylor_shift(left, 1)
        stack.append((left, 2 * c, k + 1))
        stack.append((right, 2 * c + 1, k + 1))
    return found


def _positive_roots(q: list, largest_only: bool, max_depth: int | None = None) -> list:
    """Isolating intervals of the positive roots of squarefree ``q``, descending."""
    if upoly.sign_variations(q) == 0:
        return []
    bound = positive_root_bound(q)
    f = upoly.scale_var(q, bound)
    out = []
    for c, k, exact in _isolate_unit(f, largest_only, max_depth):
        lo = Fraction(c * bound, 2**k)
        hi = lo if exact else Fraction((c + 1) * bound, 2**k)
        out.append(RootInterval(lo, hi))
    return out


def _settle(q: list, iv: RootInterval) -> RootInterval:
    """Shrink an isolating interval until both endpoints have nonzero sign."""
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    while upoly.sign_at(q, lo) == 0 or upoly.sign_at(q, hi) == 0:
        mid = (lo + hi) / 2
        if upoly.sign_at(q, mid) == 0:
            return RootInterval(mid, mid)
        # the open interval holds exactly one root; keep the half that still does
        sub_lo = RootInterval(lo, mid)
        if _count_open(q, sub_lo) == 1:
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi)


def _count_open(q: list, iv: RootInterval) -> int:
    """Descartes count on the open interval ``(lo, hi)``."""
    # p(lo + (hi - lo) t) as an integer polynomial in t
    a, b = iv.lo, iv.hi - iv.lo
    f = upoly.affine_integer(q, a, b)
    return _descartes01(f)


def refine(q: list, iv: RootInterval, rel_width: Fraction) -> RootInterval:
    iv = _settle(q, iv)
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    slo = upoly.sign_at(q, lo)
    while hi - lo > rel_width * max(abs(lo), abs(hi)):
        mid = (lo + hi) / 2
        s = upoly.sign_at(q, mid)
        if s == 0:
            return RootInterval(mid, mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi)


def real_roots(p: list, digits: int = 30, largest_only: bool = False) -> list[RootInterval]:
    """All real roots of ``p`` (ascending), each refined to relative width ``10**-digits``.

    Multiple roots are reported once.  With ``largest_only`` only the
    largest real root is isolated and refined.
    """
    p = upoly.trim(p)
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    q = upoly.squarefree_part(p)
    rel = Fraction(1, 10**digits)
    zero_root = bool(q) and q[0] == 0
    if zero_root:
        q_nz = upoly.trim(q[1:])
    else:
        q_nz = q
    pos = _positive_roots(q_nz, largest_only)
    if largest_only and pos:
        return [refine(q, pos[0], rel)]
    if largest_only and zero_root:
        return [RootInterval(Fraction(0), Fraction(0))]
    qm = [c if k % 2 == 0 else -c for k, c in enumerate(q_nz)]
    neg_raw = list(reversed(_positive_roots(qm, False)))
    neg = [RootInterval(-iv.hi, -iv.lo) for iv in neg_raw]
    if largest_only:
        neg = [max(neg, key=lambda iv: (iv.lo, iv.hi))] if neg else []
    roots = sorted(neg, key=lambda iv: iv.lo)
    if zero_root:
        roots.append(RootInterval(Fraction(0), Fraction(0)))
    roots += sorted(pos, key=lambda iv: iv.lo)
    return sorted((refine(q, iv, rel) for iv in roots), key=lambda iv: iv.mid)


def max_real_root(p: list, digits: int = 30) -> RootInterval | None:
    """Largest real root.

    The square-free reduction is skipped when the largest positive root is
    already isolated as a simple root of ``p`` itself (one sign variation);
    if bisection stalls on a multiple root the general path takes over.
    """
    p = upoly.trim(p)
    q = upoly.primitive(p)
    while q and q[0] == 0:
        q = q[1:]
    if q and upoly.degree(q) > 0:
        try:
            pos = _positive_roots(q, True, max_depth=4 * upoly.degree(q) + 64)
        except _TooDeep:
            pos = None
        if pos:
            return refine(q, pos[0], Fraction(1, 10**digits))
    roots = real_roots(p, digits, largest_only=True)
    return roots[-1] if roots else None
