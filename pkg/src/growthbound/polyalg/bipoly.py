"""Sparse bivariate integer polynomials in ``x`` and ``y``."""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping


class BiPoly:
    """Immutable map ``(deg_x, deg_y) -> nonzero int``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in x^{a} y^{b}")
            key = (int(a), int(b))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def sum_monomials(cls, monos: Iterable) -> BiPoly:
        return cls(((m[0], m[1]), 1) for m in monos)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> BiPoly:
        return cls({(a, b): c})

    # mapping-like access
    def items(self):
        return self._terms.items()

    def __getitem__(self, key) -> int:
        return self._terms.get(tuple(key), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list:
        """Canonical order: by y-degree, then x-degree."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    @property
    def deg_x(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    # arithmetic
    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        out = BiPoly({(0, 0): 1})
        for _ in range(e):
            out = out * self
        return out

    def truncate(self, nx: int, ny: int) -> BiPoly:
        return BiPoly({(a, b): c for (a, b), c in self._terms.items() if a <= nx and b <= ny})

    def evaluate(self, x, y):
        return sum(c * x**a * y**b for (a, b), c in self._terms.items())

    def count(self) -> int:
        """Value at ``x = y = 1``."""
        return sum(self._terms.values())

    def closed_part(self) -> BiPoly:
        """Terms ``x^(b-1) y^b``: configurations whose cells are all dead."""
        return BiPoly({(a, b): c for (a, b), c in self._terms.items() if a == b - 1})

    # text forms
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
            mono = "*".join(
                p for p in (
                    "" if a == 0 else ("x" if a == 1 else f"x^{a}"),
                    "" if b == 0 else ("y" if b == 1 else f"y^{b}"),
                ) if p
            )
            body = mono if (mono and abs(c) == 1) else (f"{abs(c)}*{mono}" if mono else f"{abs(c)}")
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def to_json(self) -> dict:
        return {
            "format": 1,
            "vars": ["x", "y"],
            "terms": [{"x": a, "y": b, "c": str(c)} for (a, b), c in self.sorted_terms()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, data: dict | str) -> BiPoly:
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("vars", ["x", "y"]) != ["x", "y"]:
            raise ValueError(f"expected vars [x, y], got {data.get('vars')}")
        return cls({(int(t["x"]), int(t["y"])): int(t["c"]) for t in data["terms"]})


_TERM = re.compile(
    r"""\s*([+-])?\s*(\d+)?\s*\*?\s*
        (?:x(?:\^\{?(\d+)\}?)?)?\s*\*?\s*
        (?:y(?:\^\{?(\d+)\}?)?)?\s*""",
    re.VERBOSE,
)


def parse_bipoly(text: str) -> BiPoly:
    """Parse sums like ``2x^2y + 2xy + y`` (also ``x^{24}``, ``*`` optional)."""
    text = text.replace(" ", "").replace("\n", "")
    pos = 0
    terms: dict[tuple[int, int], int] = {}
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
        sign, coef, ex, ey = m.groups()
        chunk = m.group(0)
        has_x = "x" in chunk
        has_y = "y" in chunk
        if coef is None and not (has_x or has_y):
            raise ValueError(f"empty term near {text[pos:pos + 20]!r}")
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        a = (int(ex) if ex else 1) if has_x else 0
        b = (int(ey) if ey else 1) if has_y else 0
        terms[(a, b)] = terms.get((a, b), 0) + c
        pos = m.end()
    return BiPoly(terms)
