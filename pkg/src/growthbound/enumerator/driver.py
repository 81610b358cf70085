"""Weight-sum driver: frontier split, optional process pool, deterministic merge."""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..geom import orientation_table
from ..polyalg import BiPoly
from ..twigs import TwigSet
from . import kernel
from .config import Configuration, extend

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
HEARTBEAT = 10**7
BUDGET_ENV = "GROWTHBOUND_BUDGET"


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the tree was exhausted."""


@dataclass(frozen=True)
class WeightSum:
    d: int
    i: int
    poly: BiPoly
    count: int
    nodes: int
    workers: int
    seconds: float


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def twig_set(d: int) -> TwigSet:
    if d == 2:
        from ..twigs2d import canonical_twigs_2d

        return canonical_twigs_2d()
    if d == 3:
        from ..twigs3d import canonical_twigs_3d

        return canonical_twigs_3d()
    raise ValueError(f"twig sets exist for d = 2 and 3, not {d}")


def frontier(twigs: TwigSet, i: int, depth: int):
    """Split the tree at ``depth`` dead cells.

    Returns ``(done, tasks, nodes)``: completed configurations met on the
    way down, the open configurations at the split depth (in a fixed
    order), and the number of placements tried.
    """
    done: list[Configuration] = []
    level = [Configuration.seed(twigs.dim)]
    nodes = 0
    for _ in range(depth):
        nxt = []
        for t in level:
            for twig in twigs:
                nodes += 1
                child = extend(t, twig)
                if child is None:
                    continue
                if child.is_closed or len(child.dead) == i:
                    done.append(child)
                else:
                    nxt.append(child)
        level = nxt
    return done, level, nodes


def _state_for(tables: kernel.KernelTables, twigs: TwigSet, i: int, conf: Configuration):
    table = orientation_table(twigs.dim)
    qcell, qori, occ, forb = kernel.seed_state(tables, twigs, i)
    occ[:] = 0
    k = 0
    for c in conf.dead:
        qcell[k] = tables.pack(c)
        occ[qcell[k]] = 1
        k += 1
    for c, o in conf.queue:
        qcell[k] = tables.pack(c)
        qori[k] = table.index[o]
        occ[qcell[k]] = 1
        k += 1
    for c in conf.forbidden:
        forb[tables.pack(c)] = 1
    return qcell, qori, occ, forb, len(conf.dead), k


_worker: dict = {}


def _init_worker(twigs: TwigSet, i: int):
    _worker["twigs"] = twigs
    _worker["i"] = i
    _worker["tables"] = kernel.build_tables(twigs, i)


def _run_task(args):
    conf, budget = args
    twigs, i, tables = _worker["twigs"], _worker["i"], _worker["tables"]
    qcell, qori, occ, forb, level, qlen = _state_for(tables, twigs, i, conf)
    acc = np.zeros((kernel.max_cells(twigs, i) + 1, i + 1), np.int64)
    nodes = kernel.walk(
        i, level, qlen, qcell, qori, occ, forb,
        tables.wcnt, tables.woff, tables.wori, tables.fcnt, tables.foff,
        acc, budget,
    )
    return acc, nodes


def _to_poly(acc: np.ndarray) -> dict:
    a_idx, b_idx = np.nonzero(acc)
    return {(int(a), int(b)): int(acc[a, b]) for a, b in zip(a_idx, b_idx)}


def build_weight_sum(
    d: int,
    i: int,
    workers: int = 1,
    budget: int | None = None,
    split_depth: int = 5,
    twigs: TwigSet | None = None,
) -> WeightSum:
    """``W_i(x, y)`` and ``|C_i|`` for the canonical twig set of dimension ``d``.

    The tree is cut at ``split_depth`` dead cells; each open configuration
    there is one task.  Task results are summed in task order, so the
    result does not depend on ``workers``.
    """
    if i < 1:
        raise ValueError("i must be at least 1")
    if workers < 1:
        raise ValueError("workers must be positive")
    twigs = twigs or twig_set(d)
    budget = default_budget() if budget is None else budget
    start = time.perf_counter()
    depth = max(0, min(split_depth, i - 1))
    done, tasks, nodes = frontier(twigs, i, depth)
    if nodes > budget:
        raise BudgetExceeded(f"node budget {budget} exhausted while splitting")
    terms: dict[tuple[int, int], int] = {}
    for conf in done:
        terms[conf.weight] = terms.get(conf.weight, 0) + 1
    total = np.zeros((kernel.max_cells(twigs, i) + 1, i + 1), np.int64)
    next_beat = HEARTBEAT

    def absorb(acc, n):
        nonlocal nodes, next_beat
        if n < 0:
            raise BudgetExceeded(f"node budget {budget} exhausted")
        nodes += n
        if nodes > budget:
            raise BudgetExceeded(f"node budget {budget} exhausted")
        total[...] += acc
        if nodes >= next_beat:
            log.info("d=%d i=%d: %d nodes, %d twigs so far", d, i, nodes, int(total.sum()))
            next_beat = (nodes // HEARTBEAT + 1) * HEARTBEAT

    if workers == 1 or len(tasks) < 2:
        _init_worker(twigs, i)
        for conf in tasks:
            absorb(*_run_task((conf, budget - nodes)))
    else:
        import multiprocessing as mp

        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_init_worker, initargs=(twigs, i)) as pool:
            # every task may use the whole remaining budget; the sum is checked as results arrive
            for acc, n in pool.map(_run_task, [(c, budget) for c in tasks], chunksize=8):
                absorb(acc, n)
    for key, v in _to_poly(total).items():
        terms[key] = terms.get(key, 0) + v
    poly = BiPoly(terms)
    return WeightSum(d, i, poly, poly.count(), nodes, workers, time.perf_counter() - start)


def closed_twig_census(d: int, upto: int, workers: int = 1) -> dict[int, int]:
    """Number of closed configurations (no open cells) for each dead-cell count ``<= upto``."""
    ws = build_weight_sum(d, upto, workers)
    closed = ws.poly.closed_part()
    return {b: closed[(b - 1, b)] for b in range(1, upto + 1)}
