"""Compiled depth-first walk of the twig tree.

Cells live on a cubic grid of side ``L`` centred on the seed and are packed
into one int64 index, so a placed offset is a single addition.  The walk
keeps the whole configuration in flat arrays and undoes each twig on the way
back up: ``occ`` marks dead and queued cells, ``forb`` counts how many placed
twigs forbid a cell (forbidden sets may overlap), and the queue is an array
whose head equals the number of dead cells.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from ..geom import Orientation, orientation_table
from ..twigs import TwigSet


@dataclass(frozen=True)
class KernelTables:
    """Per (orientation, twig) placement tables for one grid size."""

    dim: int
    side: int
    origin: int
    identity: int
    wcnt: np.ndarray
    woff: np.ndarray
    wori: np.ndarray
    fcnt: np.ndarray
    foff: np.ndarray
    strides: tuple[int, ...]

    def pack(self, cell) -> int:
        return self.origin + sum(c * s for c, s in zip(cell, self.strides))

    def unpack(self, idx: int):
        idx -= self.origin
        out = []
        for s in reversed(self.strides):
            # strides are powers of side; round to the nearest multiple
            q = (idx + s * (self.side // 2)) // s - self.side // 2
            out.append(q)
            idx -= q * s
        return tuple(reversed(out))


def grid_radius(i: int) -> int:
    # whites sit within distance 2 of their root; forbidden cells likewise
    return 2 * i + 4


def build_tables(twigs: TwigSet, i: int) -> KernelTables:
    d = twigs.dim
    table = orientation_table(d)
    radius = grid_radius(i)
    side = 2 * radius + 1
    strides = tuple(side**k for k in range(d))
    origin = sum(radius * s for s in strides)
    n_o, n_t = len(table.elements), len(twigs)
    mw = max(1, max(len(t.whites) for t in twigs))
    mf = max(1, max(len(t.forbidden) for t in twigs))
    wcnt = np.zeros(n_t, np.int64)
    fcnt = np.zeros(n_t, np.int64)
    woff = np.zeros((n_o, n_t, mw), np.int64)
    wori = np.zeros((n_o, n_t, mw), np.int64)
    foff = np.zeros((n_o, n_t, mf), np.int64)

    def lin(c):
        return sum(v * s for v, s in zip(c, strides))

    zero = (0,) * d
    for t_idx, twig in enumerate(twigs):
        wcnt[t_idx] = len(twig.whites)
        fcnt[t_idx] = len(twig.forbidden)
        forbidden = sorted(twig.forbidden)
        for o_idx, o in enumerate(table.elements):
            for k, (c, w) in enumerate(twig.placed_whites(zero, o)):
                woff[o_idx, t_idx, k] = lin(c)
                wori[o_idx, t_idx, k] = table.index[w]
            for k, c in enumerate(forbidden):
                foff[o_idx, t_idx, k] = lin(o.apply(c))
    return KernelTables(d, side, origin, table.identity, wcnt, woff, wori, fcnt, foff, strides)


@njit(cache=True)
def walk(
    i,
    level,
    qlen,
    qcell,
    qori,
    occ,
    forb,
    wcnt,
    woff,
    wori,
    fcnt,
    foff,
    acc,
    budget,
):
    """Enumerate the subtree below the configuration given by the state arrays.

    ``level`` is the number of dead cells (and the queue head).  Completed
    configurations add one to ``acc[cells - 1, dead]``.  Returns the number of
    twig placements tried, or ``-1`` once ``budget`` is exceeded (the state
    arrays are then left dirty).
    """
    n_t = wcnt.shape[0]
    base = level
    nxt = np.zeros(i + 1, np.int64)
    applied = np.full(i + 1, -1, np.int64)
    saved = np.zeros(i + 1, np.int64)
    nodes = 0
    while level >= base:
        t = applied[level]
        if t >= 0:
            u = qcell[level]
            o = qori[level]
            for k in range(wcnt[t]):
                occ[u + woff[o, t, k]] = 0
            for k in range(fcnt[t]):
                forb[u + foff[o, t, k]] -= 1
            qlen = saved[level]
            applied[level] = -1
        t = nxt[level]
        if t == n_t:
            level -= 1
            continue
        nxt[level] = t + 1
        nodes += 1
        if nodes > budget:
            return -1
        u = qcell[level]
        o = qori[level]
        ok = True
        for k in range(wcnt[t]):
            c = u + woff[o, t, k]
            if occ[c] != 0 or forb[c] != 0:
                ok = False
                break
        if not ok:
            continue
        newq = qlen + wcnt[t]
        if level + 1 == i or newq == level + 1:
            acc[newq - 1, level + 1] += 1
            continue
        for k in range(wcnt[t]):
            c = u + woff[o, t, k]
            occ[c] = 1
            qcell[qlen + k] = c
            qori[qlen + k] = wori[o, t, k]
        for k in range(fcnt[t]):
            forb[u + foff[o, t, k]] += 1
        applied[level] = t
        saved[level] = qlen
        qlen = newq
        level += 1
        nxt[level] = 0
        applied[level] = -1
    return nodes


def max_cells(twigs: TwigSet, i: int) -> int:
    return 1 + i * max(len(t.whites) for t in twigs)


def seed_state(tables: KernelTables, twigs: TwigSet, i: int):
    """Arrays for the single-open-cell seed (its context cells are left free)."""
    size = tables.side**tables.dim
    n = max_cells(twigs, i) + 1
    occ = np.zeros(size, np.uint8)
    forb = np.zeros(size, np.int32)
    qcell = np.zeros(n, np.int64)
    qori = np.zeros(n, np.int64)
    qcell[0] = tables.origin
    qori[0] = tables.identity
    occ[tables.origin] = 1
    return qcell, qori, occ, forb


def count_subtree(tables: KernelTables, twigs: TwigSet, i: int, budget: int = 2**62):
    """Whole tree from the seed, in one call.  Returns ``(acc, nodes)``."""
    qcell, qori, occ, forb = seed_state(tables, twigs, i)
    acc = np.zeros((max_cells(twigs, i) + 1, i + 1), np.int64)
    nodes = walk(
        i, 0, 1, qcell, qori, occ, forb,
        tables.wcnt, tables.woff, tables.wori, tables.fcnt, tables.foff,
        acc, budget,
    )
    return acc, nodes


__all__ = ["KernelTables", "Orientation", "build_tables", "count_subtree", "seed_state", "walk"]
