"""Dense univariate integer polynomials as coefficient lists, lowest degree first.

The zero polynomial is ``[]``.  Every function returns a trimmed list and
never mutates its arguments.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

UPoly = list  # list[int]


def trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: list) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(p) - 1


def lc(p: list) -> int:
    return p[-1] if p else 0


def add(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    return trim(out)


def neg(p: list) -> list:
    return [-c for c in p]


def sub(p: list, q: list) -> list:
    return add(p, neg(q))


def scale(p: list, c: int) -> list:
    if c == 0:
        return []
    return [c * v for v in p]


def mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p: list, e: int) -> list:
    out = [1]
    base = p
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def shift(p: list, k: int) -> list:
    """Multiply by ``z**k``."""
    return [0] * k + list(p) if p else []


def content(p: list) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: list) -> list:
    g = content(p)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def derivative(p: list) -> list:
    return trim([k * c for k, c in enumerate(p)][1:])


def evaluate(p: list, z):
    """Horner evaluation at an int or a Fraction."""
    acc = 0
    for c in reversed(p):
        acc = acc * z + c
    return acc


def eval_scaled(p: list, num: int, den: int) -> int:
    """``den**deg(p) * p(num/den)``, an exact integer with the sign of ``p(num/den)``."""
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    return acc


def sign_at(p: list, x: Fraction) -> int:
    v = eval_scaled(p, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def exact_div(p: list, q: list) -> list:
    """``p / q`` in ``Z[z]``; raises ``ArithmeticError`` if ``q`` does not divide ``p``."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p = list(p)
    dq = len(q) - 1
    lq = q[-1]
    if len(p) - 1 < dq:
        if p:
            raise ArithmeticError("inexact polynomial division")
        return []
    out = [0] * (len(p) - dq)
    for k in range(len(p) - 1, dq - 1, -1):
        c = p[k]
        if c == 0:
            continue
        f, r = divmod(c, lq)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k - dq] = f
        for j in range(dq + 1):
            p[k - dq + j] -= f * q[j]
    if any(p[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return trim(out)


def div_scalar(p: list, c: int) -> list:
    out = []
    for v in p:
        f, r = divmod(v, c)
        if r:
            raise ArithmeticError("inexact scalar division")
        out.append(f)
    return out


def pseudo_rem(p: list, q: list) -> list:
    """``lc(q)**(deg p - deg q + 1) * p mod q``."""
    dq = degree(q)
    e = degree(p) - dq + 1
    if e <= 0:
        return list(p)
    lq = q[-1]
    r = list(p)
    while r and degree(r) >= dq:
        r = sub(scale(r, lq), shift(scale(q, r[-1]), degree(r) - dq))
        e -= 1
    return scale(r, lq**e)


def taylor_shift(p: list, c: int = 1) -> list:
    """``p(z + c)``."""
    out = list(p)
    n = len(out)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            out[k] += c * out[k + 1]
    return trim(out)


def scale_var(p: list, num: int, den: int = 1) -> list:
    """``den**deg(p) * p(num * z / den)``: an integer polynomial."""
    n = degree(p)
    return trim([c * num**k * den ** (n - k) for k, c in enumerate(p)])


def affine_integer(p: list, a: Fraction, b: Fraction) -> list:
    """A positive integer multiple of ``p(a + b*t)`` for rationals ``a`` and ``b > 0``."""
    a, b = Fraction(a), Fraction(b)
    den = a.denominator * b.denominator
    big_a = a.numerator * b.denominator
    big_b = b.numerator * a.denominator
    return scale_var(taylor_shift(scale_var(p, 1, den), big_a), big_b)


def reverse(p: list) -> list:
    return trim(list(reversed(p)))


def sign_variations(p: list) -> int:
    last = 0
    count = 0
    for c in p:
        if c:
            if last and (c > 0) != (last > 0):
                count += 1
            last = c
    return count


def gcd_poly(p: list, q: list) -> list:
    """Primitive gcd over ``Z`` via the subresultant remainder sequence."""
    from .resultant import INTEGERS, subresultant_gcd

    return primitive(subresultant_gcd(p, q, INTEGERS))


_PRIMES = (2**61 - 1, 2**31 - 1, 1_000_000_007)


def _gcd_degree_mod(p: list, q: list, m: int) -> int:
    """Degree of ``gcd(p, q)`` over ``GF(m)`` (Euclid with small residues)."""
    a = trim([c % m for c in p])
    b = trim([c % m for c in q])
    while b:
        inv = pow(b[-1], -1, m)
        while len(a) >= len(b):
            f = a[-1] * inv % m
            k = len(a) - len(b)
            for j, c in enumerate(b):
                a[k + j] = (a[k + j] - f * c) % m
            a = trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def is_squarefree(p: list) -> bool | None:
    """``True`` when a modular gcd proves ``p`` squarefree; ``None`` if inconclusive."""
    dp = derivative(p)
    for m in _PRIMES:
        if p and p[-1] % m and len(dp) == len(p) - 1 and dp[-1] % m:
            if _gcd_degree_mod(p, dp, m) == 0:
                return True
    return None


def squarefree_part(p: list) -> list:
    if is_squarefree(p):
        return primitive(p)
    g = gcd_poly(p, derivative(p))
    if degree(g) <= 0:
        return primitive(p)
    return primitive(exact_div(p, g))


def from_binomial_basis(coeffs: list) -> list:
    """``sum a_k * z(z-1)...(z-k+1)`` as a monomial-basis polynomial."""
    out: list = []
    for k in range(len(coeffs) - 1, -1, -1):
        out = add(mul(out, [-k, 1]), [coeffs[k]])
    return out


def interpolate_consecutive(values: list) -> list:
    """The integer polynomial taking ``values[k]`` at ``z = k`` (Newton forward differences)."""
    diffs = list(values)
    newton = []
    fact = 1
    for k in range(len(values)):
        if k:
            fact *= k
        q, r = divmod(diffs[0], fact)
        if r:
            raise ArithmeticError("values do not come from an integer polynomial")
        newton.append(q)
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return from_binomial_basis(newton)


def to_str(p: list, var: str = "z") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}" + (f"*{mono}" if mono else "")
        parts.append(("-" if c < 0 else "+") + body)
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def binomial_poly(n: int) -> list:
    """``(1 + z)**n``."""
    return [comb(n, k) for k in range(n + 1)]
