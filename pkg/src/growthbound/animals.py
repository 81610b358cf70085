"""Fixed lattice animals (polyominoes, polycubes) and their text format."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .geom import Cell, lex_key, neighbors, sub


class InvalidAnimalError(ValueError):
    """Raised for empty, mixed-dimension or disconnected cell sets."""


def is_connected(cells: Iterable[Cell]) -> bool:
    cells = set(cells)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for n in neighbors(c):
            if n in cells and n not in seen:
                seen.add(n)
                todo.append(n)
    return len(seen) == len(cells)


def normalize(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Translate so that the lexicographically smallest cell sits at the origin."""
    cells = list(cells)
    low = min(cells, key=lex_key)
    return frozenset(sub(c, low) for c in cells)


@dataclass(frozen=True)
class Animal:
    """A translation-normalized, face-connected set of lattice cells."""

    cells: frozenset[Cell]

    def __post_init__(self):
        if not self.cells:
            raise InvalidAnimalError("an animal needs at least one cell")
        dims = {len(c) for c in self.cells}
        if len(dims) != 1:
            raise InvalidAnimalError(f"mixed dimensions {sorted(dims)}")
        if not is_connected(self.cells):
            raise InvalidAnimalError("cells are not face-connected")
        if min(self.cells, key=lex_key) != (0,) * self.dim:
            object.__setattr__(self, "cells", normalize(self.cells))

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> Animal:
        return cls(frozenset(tuple(int(v) for v in c) for c in cells))

    @property
    def dim(self) -> int:
        return len(next(iter(self.cells)))

    @property
    def size(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells, key=lex_key)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.sorted_cells())


def bfs_order(cells: frozenset[Cell], root: Cell) -> list[Cell]:
    seen = {root}
    order = [root]
    todo = deque([root])
    while todo:
        c = todo.popleft()
        for n in neighbors(c):
            if n in cells and n not in seen:
                seen.add(n)
                order.append(n)
                todo.append(n)
    return order


def parse_animal(text: str, dim: int | None = None) -> Animal:
    """Parse the ``x y [z]`` one-cell-per-line format (``#`` starts a comment)."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            cell = tuple(int(tok) for tok in line.split())
        except ValueError as exc:
            raise InvalidAnimalError(f"line {lineno}: {raw!r} is not a list of integers") from exc
        if dim is not None and len(cell) != dim:
            raise InvalidAnimalError(f"line {lineno}: expected {dim} coordinates, got {len(cell)}")
        cells.append(cell)
    if len(set(cells)) != len(cells):
        raise InvalidAnimalError("duplicate cells")
    return Animal.of(cells)


def format_animal(animal: Animal) -> str:
    return "".join(" ".join(str(v) for v in c) + "\n" for c in animal.sorted_cells())


def read_animal(path: str | Path, dim: int | None = None) -> Animal:
    return parse_animal(Path(path).read_text(), dim)


def write_animal(animal: Animal, path: str | Path) -> None:
    Path(path).write_text(format_animal(animal))
