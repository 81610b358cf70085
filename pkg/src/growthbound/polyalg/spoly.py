"""Polynomials in ``s`` whose coefficients are integer polynomials in ``z``."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import upoly
from .bipoly import BiPoly


class MalformedWeightError(ValueError):
    """A weight polynomial with a term ``x^a y^b``, ``a < b - 1``."""


@dataclass(frozen=True)
class SPoly:
    coeffs: tuple  # coeffs[k] is the z-polynomial multiplying s**k

    def __post_init__(self):
        c = [upoly.trim(v) for v in self.coeffs]
        while c and not c[-1]:
            c.pop()
        if not c:
            raise ValueError("zero SPoly")
        object.__setattr__(self, "coeffs", tuple(tuple(v) for v in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zdegree(self) -> int:
        return max(len(v) - 1 for v in self.coeffs)

    @property
    def lc(self) -> list:
        return list(self.coeffs[-1])

    def derivative(self) -> SPoly:
        return SPoly(tuple(upoly.scale(list(v), k) for k, v in enumerate(self.coeffs))[1:])

    def at(self, z: int) -> list:
        """Coefficient list in ``s`` at an integer ``z`` (formal degree kept)."""
        return [upoly.evaluate(list(v), z) for v in self.coeffs]

    def content(self) -> int:
        g = 0
        for v in self.coeffs:
            for c in v:
                g = gcd(g, c)
        return g

    def primitive(self) -> SPoly:
        g = self.content()
        return SPoly(tuple(tuple(c // g for c in v) for v in self.coeffs))

    def terms(self) -> dict:
        return {(k, j): c for k, v in enumerate(self.coeffs) for j, c in enumerate(v) if c}

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            v = list(self.coeffs[k])
            if not v:
                continue
            sp = "" if k == 0 else ("*s" if k == 1 else f"*s^{k}")
            parts.append(f"({upoly.to_str(v)}){sp}")
        return " + ".join(parts)


def clear_denominator(w: BiPoly) -> SPoly:
    """``D(s, z) = s * (1 - W(s, z/s))``, exact over the integers.

    A term ``c x^a y^b`` becomes ``-c z^b s^(a-b+1)``; twig weights always
    have ``a >= b - 1`` so no negative powers of ``s`` appear.
    """
    coeffs: dict[int, dict[int, int]] = {1: {0: 1}}
    for (a, b), c in w.items():
        k = a - b + 1
        if k < 0:
            raise MalformedWeightError(f"term x^{a} y^{b} has a < b - 1")
        row = coeffs.setdefault(k, {})
        row[b] = row.get(b, 0) - c
    top = max(coeffs)
    out = []
    for k in range(top + 1):
        row = coeffs.get(k, {})
        out.append(tuple(row.get(j, 0) for j in range(max(row, default=-1) + 1)))
    return SPoly(tuple(out))
