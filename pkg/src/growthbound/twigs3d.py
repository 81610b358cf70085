"""The seventeen polycube twigs and the +L context.

Canonical frame of an open cube ``o`` at the origin (cells compared
x-first).  Its +L context is the planar L ``(0,-1,0), (-1,-1,0), (-1,0,0),
(-1,1,0)`` together with ``(-1,0,1)`` and ``(-1,0,-1)``; all six precede
``o`` in lexicographic order.  The four remaining neighbours are
``a = (1,0,0)``, ``b = (0,1,0)``, ``zp = (0,0,1)`` and ``zm = (0,0,-1)``,
and ``c = (1,1,0)`` touches both ``a`` and ``b``.

A canonical context consists of a long neighbour (image of ``-e1``), a short
neighbour (image of ``-e2``) and a ``+`` axis (image of ``e3``).  The
contexts handed to new open cubes:

==========  ==================  ============================================
white       images of e1,e2,e3  context cells
==========  ==================  ============================================
zp          e3, e1, -e2         o, (-1,0,1), (-1,0,0), a, b, (0,-1,0)
zm          -e3, e1, e2         o, (-1,0,-1), (-1,0,0), a, b, (0,-1,0)
b           e2, e1, e3          o, (-1,1,0), (-1,0,0), a, zp, zm
a (via b)   e1, -e2, e3         o, c, b, (0,-1,0), zp, zm
a (via zp)  e1, -e3, e2         o, (1,0,1), zp, zm, b, (0,-1,0)
a (via zm)  e1, e3, e2          o, (1,0,-1), zm, zp, b, (0,-1,0)
c           e2, e1, e3          a, b, o, (2,0,0), (1,0,1), (1,0,-1)
==========  ==================  ============================================

Open cubes are queued in the order zp, b, zm, a, so every context cell has
a known status by the time its cube is dequeued.  ``a`` takes its context
from ``b`` when ``b`` is new, otherwise from the first new ``z`` neighbour.
When ``a`` is the only new neighbour, the status of ``c`` is needed and the
case splits in two, exactly as in the plane.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .animals import Animal
from .geom import Cell, Orientation, add
from .twigs import Twig, TwigSequence, TwigSet, decode, encode

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def _neg(v: Cell) -> Cell:
    return tuple(-x for x in v)


NEIGHBOUR = {"a": (1, 0, 0), "b": (0, 1, 0), "zp": (0, 0, 1), "zm": (0, 0, -1)}
C = (1, 1, 0)
CONTEXT_3D = frozenset(
    {(0, -1, 0), (-1, -1, 0), (-1, 0, 0), (-1, 1, 0), (-1, 0, 1), (-1, 0, -1)}
)

QUEUE_ORDER = ("zp", "b", "zm", "a")
A_PARTNERS = ("b", "zp", "zm")

ORIENT = {
    "zp": Orientation.from_images(E3, E1, _neg(E2)),
    "zm": Orientation.from_images(_neg(E3), E1, E2),
    "b": Orientation.from_images(E2, E1, E3),
    "c": Orientation.from_images(E2, E1, E3),
    ("a", "b"): Orientation.from_images(E1, _neg(E2), E3),
    ("a", "zp"): Orientation.from_images(E1, _neg(E3), E2),
    ("a", "zm"): Orientation.from_images(E1, E3, E2),
}


def plus_l_context(u: Cell, o: Orientation) -> frozenset[Cell]:
    """The six +L context cells of ``u`` under orientation ``o``."""
    return frozenset(add(u, o.apply(v)) for v in CONTEXT_3D)


def _twig(name: str, new: list[str], extra_c: str | None) -> Twig:
    order = [k for k in QUEUE_ORDER if k in new]
    whites = []
    for k in order:
        if k == "a":
            partner = next((p for p in A_PARTNERS if p in new), "b")
            whites.append((NEIGHBOUR["a"], ORIENT[("a", partner)]))
        else:
            whites.append((NEIGHBOUR[k], ORIENT[k]))
    forbidden = {NEIGHBOUR[k] for k in NEIGHBOUR if k not in new}
    if extra_c == "white":
        whites.append((C, ORIENT["c"]))
    elif extra_c == "forbidden":
        forbidden.add(C)
    return Twig(name, tuple(whites), frozenset(forbidden))


@lru_cache(maxsize=None)
def canonical_twigs_3d() -> TwigSet:
    twigs = []
    for bits in itertools.product((0, 1), repeat=4):
        new = [k for k, bit in zip(("a", "b", "zp", "zm"), bits) if bit]
        if new == ["a"]:
            twigs.append(_twig(f"T{len(twigs) + 1}", new, "forbidden"))
            twigs.append(_twig(f"T{len(twigs) + 1}", new, "white"))
        else:
            twigs.append(_twig(f"T{len(twigs) + 1}", new, None))
    return TwigSet(3, tuple(twigs), CONTEXT_3D)


def encode_polycube(p: Animal) -> TwigSequence:
    return encode(p, canonical_twigs_3d())


def decode_twigs_3d(seq: TwigSequence | list[str] | tuple[str, ...]) -> Animal:
    return decode(seq, canonical_twigs_3d())
