"""The five planar twigs L1..L5 and the polyomino encodings built on them.

Canonical frame of an open square ``u`` at the origin: its context is the
L-tetromino ``(-1,0), (-1,-1), (0,-1), (1,-1)`` (everything there is
already encoded), the two free neighbours are ``a = (0,1)`` and
``b = (1,0)``, and ``c = (1,1)`` is the square touching both.

Context orientations handed to new open squares:

* ``a`` gets the mirror ``x -> -x``; its L is ``c, b, u, (-1,0)``, so the
  status of ``c`` must be known before ``a`` is dequeued.
* ``b`` gets the diagonal swap; its L is ``(1,-1), (0,-1), u, a``.
* ``c`` (second white of L3) also gets the swap; its L is ``b, u, a, (0,2)``,
  known once ``a`` has been processed.

Hence L5 queues ``b`` before ``a`` (processing ``b`` settles ``c``) and L3
queues ``a`` before ``c``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .animals import Animal
from .geom import Orientation, lex_key, neighbors
from .twigs import Twig, TwigSequence, TwigSet, decode, encode

A, B, C = (0, 1), (1, 0), (1, 1)
CONTEXT_2D = frozenset({(-1, 0), (-1, -1), (0, -1), (1, -1)})

MIRROR = Orientation.from_images((-1, 0), (0, 1))
SWAP = Orientation.from_images((0, 1), (1, 0))


@lru_cache(maxsize=None)
def canonical_twigs_2d() -> TwigSet:
    twigs = (
        Twig("L1", (), frozenset({A, B})),
        Twig("L2", ((A, MIRROR),), frozenset({B, C})),
        Twig("L3", ((A, MIRROR), (C, SWAP)), frozenset({B})),
        Twig("L4", ((B, SWAP),), frozenset({A})),
        Twig("L5", ((B, SWAP), (A, MIRROR)), frozenset()),
    )
    return TwigSet(2, twigs, CONTEXT_2D)


def encode_polyomino(p: Animal) -> TwigSequence:
    return encode(p, canonical_twigs_2d())


def decode_twigs(seq: TwigSequence | list[str] | tuple[str, ...]) -> Animal:
    return decode(seq, canonical_twigs_2d())


# Eden's walk: clockwise relative to the incoming edge, starting from the
# direction straight ahead's left-hand side.
_CLOCKWISE = [(0, 1), (1, 0), (0, -1), (-1, 0)]


def encode_eden(p: Animal) -> str:
    """Eden's breadth-first bit string: one bit per outgoing edge, ``3n - 1`` bits.

    Each visited cell looks at its three neighbours other than the one it was
    reached from, in clockwise order; a bit is 1 when that neighbour is a
    cell of ``p`` not yet numbered.  The root's imaginary incoming edge comes
    from below, so it inspects three cells and every later cell contributes
    three more; the final zero of the last cell is implied and dropped.
    """
    if p.dim != 2:
        raise ValueError("Eden encoding is implemented for polyominoes")
    cells = p.cells
    root = min(cells, key=lex_key)
    numbered = {root}
    queue = deque([(root, (0, -1))])
    bits = []
    while queue:
        u, came_from = queue.popleft()
        back = _CLOCKWISE.index(came_from)
        for k in range(1, 4):
            d = _CLOCKWISE[(back + k) % 4]
            n = (u[0] + d[0], u[1] + d[1])
            if n in cells and n not in numbered:
                numbered.add(n)
                queue.append((n, (-d[0], -d[1])))
                bits.append("1")
            else:
                bits.append("0")
    assert bits[-1] == "0"
    return "".join(bits[:-1])


def decode_eden(bits: str) -> Animal:
    """Inverse of :func:`encode_eden`."""
    stream = iter(bits + "0")
    cells = {(0, 0)}
    queue = deque([((0, 0), (0, -1))])
    while queue:
        u, came_from = queue.popleft()
        back = _CLOCKWISE.index(came_from)
        for k in range(1, 4):
            d = _CLOCKWISE[(back + k) % 4]
            bit = next(stream, None)
            if bit is None:
                raise ValueError("bit string ended early")
            if bit == "1":
                n = (u[0] + d[0], u[1] + d[1])
                if n in cells:
                    raise ValueError(f"cell {n} numbered twice")
                cells.add(n)
                queue.append((n, (-d[0], -d[1])))
    if next(stream, None) is not None:
        raise ValueError("trailing bits")
    return Animal.of(cells)


def l_context(u, o: Orientation) -> frozenset:
    """The four context squares of ``u`` under orientation ``o``."""
    return frozenset((u[0] + v[0], u[1] + v[1]) for v in map(o.apply, CONTEXT_2D))


__all__ = [
    "CONTEXT_2D",
    "canonical_twigs_2d",
    "decode_eden",
    "decode_twigs",
    "encode_eden",
    "encode_polyomino",
    "l_context",
    "neighbors",
]
