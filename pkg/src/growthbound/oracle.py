"""Brute-force counts of fixed polyominoes and polycubes (Redelmeier's method).

Two independent routes: ``count_fixed`` runs a compiled counter over a flat
grid, ``enumerate_fixed`` is a plain generator that materialises every
animal.  Both grow only into cells that follow the root in lexicographic
order, so each translation class is produced once.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numba import njit

from .animals import Animal
from .geom import lex_key, neighbors


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CountTable:
    d: int
    counts: tuple[int, ...]  # counts[n - 1] = A_d(n)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError(n)
        return self.counts[n - 1]

    @property
    def n_max(self) -> int:
        return len(self.counts)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count"])
        for n, c in enumerate(self.counts, 1):
            w.writerow([n, c])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, d: int, text: str) -> CountTable:
        rows = list(csv.DictReader(io.StringIO(text)))
        return cls(d, tuple(int(r["count"]) for r in rows))


@njit(cache=True)
def _redelmeier(n_max, origin, offsets, size, budget):
    counts = np.zeros(n_max + 1, np.int64)
    reached = np.zeros(size, np.uint8)
    width = n_max * offsets.shape[0] + 1
    untried = np.zeros((n_max + 1, width), np.int64)
    fill = np.zeros(n_max + 1, np.int64)
    fresh = np.zeros((n_max + 1, offsets.shape[0]), np.int64)
    nfresh = np.zeros(n_max + 1, np.int64)
    untried[0, 0] = origin
    fill[0] = 1
    reached[origin] = 1
    k = 0
    nodes = 0
    while k >= 0:
        if fill[k] == 0:
            k -= 1
            if k >= 0:
                for j in range(nfresh[k]):
                    reached[fresh[k, j]] = 0
            continue
        fill[k] -= 1
        c = untried[k, fill[k]]
        counts[k + 1] += 1
        nodes += 1
        if nodes > budget:
            return counts, -1
        if k + 1 < n_max:
            m = fill[k]
            for j in range(m):
                untried[k + 1, j] = untried[k, j]
            nn = 0
            for j in range(offsets.shape[0]):
                nb = c + offsets[j]
                if nb > origin and reached[nb] == 0:
                    reached[nb] = 1
                    untried[k + 1, m] = nb
                    m += 1
                    fresh[k, nn] = nb
                    nn += 1
            nfresh[k] = nn
            fill[k + 1] = m
            k += 1
    return counts, nodes


def _grid(d: int, n: int):
    side = 2 * n + 3
    # the most significant coordinate in lexicographic order gets the largest stride
    order = [1, 0] if d == 2 else list(range(d))
    strides = [0] * d
    s = 1
    for axis in reversed(order):
        strides[axis] = s
        s *= side
    centre = sum((side // 2) * st for st in strides)
    offsets = []
    for axis in range(d):
        offsets += [strides[axis], -strides[axis]]
    return side**d, centre, np.array(offsets, np.int64)


def count_fixed(d: int, n_max: int, budget: int = 10**10) -> CountTable:
    """``A_d(1..n_max)`` without building any animal."""
    if d not in (2, 3):
        raise ValueError("the oracle supports d = 2 and 3")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    size, origin, offsets = _grid(d, n_max)
    counts, nodes = _redelmeier(n_max, origin, offsets, size, budget)
    if nodes < 0:
        raise OracleBudgetExceeded(f"more than {budget} animals")
    return CountTable(d, tuple(int(c) for c in counts[1:]))


def enumerate_fixed(d: int, n: int) -> Iterator[Animal]:
    """Every fixed animal with exactly ``n`` cells, each once, normalised."""
    if d not in (2, 3):
        raise ValueError("the oracle supports d = 2 and 3")
    if n < 1:
        return
    origin = (0,) * d
    root_key = lex_key(origin)
    reached = {origin}
    cells: list = []

    def grow(untried: list):
        untried = list(untried)
        while untried:
            c = untried.pop()
            cells.append(c)
            if len(cells) == n:
                yield Animal(frozenset(cells))
            else:
                fresh = [
                    nb for nb in neighbors(c)
                    if lex_key(nb) > root_key and nb not in reached
                ]
                reached.update(fresh)
                yield from grow(untried + fresh)
                reached.difference_update(fresh)
            cells.pop()

    yield from grow([origin])
