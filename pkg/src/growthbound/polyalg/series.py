"""Diagonal coefficients of ``x / (1 - W(x, y))`` as a formal power series."""

from __future__ import annotations

from .bipoly import BiPoly


def _mul_trunc(p: list, q: list, n: int) -> list:
    out = [0] * n
    for i, a in enumerate(p[:n]):
        if a:
            for j, b in enumerate(q[: n - i]):
                out[i + j] += a * b
    return out


def _inv_trunc(p: list, n: int) -> list:
    """``1 / p`` modulo ``x**n`` for ``p[0] == 1``."""
    out = [0] * n
    out[0] = 1
    for k in range(1, n):
        out[k] = -sum(p[j] * out[k - j] for j in range(1, min(k, len(p) - 1) + 1))
    return out


def series_diagonal(w: BiPoly, n_max: int) -> list[int]:
    """``[c(0,0), ..., c(N,N)]`` where ``c(n,n)`` is the ``x^n y^n`` coefficient.

    ``F = 1/(1-W)`` is built one y-degree at a time,
    ``F_b = (sum_{b' >= 1} W_b' F_{b-b'}) / (1 - W_0)``, keeping x-degrees
    below ``N``; then ``c(n,n) = [x^(n-1)] F_n``.
    """
    if w[(0, 0)] != 0:
        raise ValueError("W has a nonzero constant term; 1/(1-W) is not a formal series here")
    n = max(n_max, 1)
    by_y: dict[int, list] = {}
    for (a, b), c in w.items():
        if a < n:
            row = by_y.setdefault(b, [0] * n)
            row[a] += c
    w0 = by_y.pop(0, [0] * n)
    inv = _inv_trunc([1] + [-c for c in w0[1:]], n)
    f = [inv]
    for b in range(1, n_max + 1):
        acc = [0] * n
        for bb, row in by_y.items():
            if bb <= b:
                prod = _mul_trunc(row, f[b - bb], n)
                for k in range(n):
                    acc[k] += prod[k]
        f.append(_mul_trunc(acc, inv, n) if any(w0) else acc)
    return [0] + [f[k][k - 1] for k in range(1, n_max + 1)]
