"""Lattice cells, lexicographic order and the signed-permutation transforms.

Cells are plain tuples of ints.  Orientations are signed permutations of the
coordinate axes; the full group is tabulated once per dimension so that
composition and inversion reduce to table lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Cell = tuple[int, ...]


class DimensionError(ValueError):
    """Two objects of different dimension were combined."""


def lex_key(cell: Cell) -> Cell:
    """Sort key realising :func:`lex_compare`.

    Squares are ordered by y first and x second; cubes (and higher) by the
    coordinates in index order.
    """
    if len(cell) == 2:
        return (cell[1], cell[0])
    return tuple(cell)


def lex_compare(c1: Cell, c2: Cell) -> int:
    """Return -1, 0 or 1 as ``c1`` is smaller than, equal to or larger than ``c2``."""
    if len(c1) != len(c2):
        raise DimensionError(f"cannot compare {c1!r} with {c2!r}")
    k1, k2 = lex_key(c1), lex_key(c2)
    return (k1 > k2) - (k1 < k2)


def add(c1: Cell, c2: Cell) -> Cell:
    return tuple(a + b for a, b in zip(c1, c2))


def sub(c1: Cell, c2: Cell) -> Cell:
    return tuple(a - b for a, b in zip(c1, c2))


def neighbors(cell: Cell) -> list[Cell]:
    out = []
    for axis in range(len(cell)):
        for step in (1, -1):
            n = list(cell)
            n[axis] += step
            out.append(tuple(n))
    return out


def l1_distance(c1: Cell, c2: Cell) -> int:
    return sum(abs(a - b) for a, b in zip(c1, c2))


@dataclass(frozen=True)
class Orientation:
    """Signed permutation: basis vector ``e_j`` is sent to ``signs[j] * e_{perm[j]}``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, dim: int) -> Orientation:
        return cls(tuple(range(dim)), (1,) * dim)

    @classmethod
    def from_images(cls, *images: Cell) -> Orientation:
        """Build from the images of ``e_1, ..., e_d`` (each a signed unit vector)."""
        perm, signs = [], []
        for img in images:
            nz = [(k, v) for k, v in enumerate(img) if v]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise ValueError(f"{img!r} is not a signed unit vector")
            perm.append(nz[0][0])
            signs.append(nz[0][1])
        if sorted(perm) != list(range(len(images))):
            raise ValueError("images do not form a signed permutation")
        return cls(tuple(perm), tuple(signs))

    def apply(self, cell: Cell) -> Cell:
        if len(cell) != self.dim:
            raise DimensionError(f"orientation of dim {self.dim} applied to {cell!r}")
        out = [0] * self.dim
        for j, v in enumerate(cell):
            out[self.perm[j]] = self.signs[j] * v
        return tuple(out)

    def compose(self, other: Orientation) -> Orientation:
        """The transform ``self o other`` (apply ``other`` first)."""
        perm = tuple(self.perm[p] for p in other.perm)
        signs = tuple(s * self.signs[p] for p, s in zip(other.perm, other.signs))
        return Orientation(perm, signs)

    def inverse(self) -> Orientation:
        perm = [0] * self.dim
        signs = [0] * self.dim
        for j, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = j
            signs[p] = s
        return Orientation(tuple(perm), tuple(signs))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        rows = [[0] * self.dim for _ in range(self.dim)]
        for j, (p, s) in enumerate(zip(self.perm, self.signs)):
            rows[p][j] = s
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class OrientationTable:
    """All ``2^d d!`` signed permutations of dimension ``d`` with lookup tables."""

    dim: int
    elements: tuple[Orientation, ...]
    index: dict
    compose: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]

    @property
    def identity(self) -> int:
        return self.index[Orientation.identity(self.dim)]


@lru_cache(maxsize=None)
def orientation_table(dim: int) -> OrientationTable:
    elements = tuple(
        Orientation(perm, signs)
        for perm in itertools.permutations(range(dim))
        for signs in itertools.product((1, -1), repeat=dim)
    )
    index = {o: k for k, o in enumerate(elements)}
    compose = tuple(tuple(index[a.compose(b)] for b in elements) for a in elements)
    inverse = tuple(index[o.inverse()] for o in elements)
    return OrientationTable(dim, elements, index, compose, inverse)
