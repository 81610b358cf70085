"""Reference (pure Python) configurations and the twig-extension step.

This is the slow, readable route.  The compiled kernel walks the same tree;
the two are compared in the tests for small ``i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..geom import Cell, Orientation
from ..twigs import Twig, TwigSet


@dataclass(frozen=True)
class Configuration:
    """A partially grown animal.

    ``queue`` holds the open cells (oldest first) with their context
    orientations; ``cells`` is the number of cells ever enqueued, so the
    weight is ``x^(cells - 1) y^(len(dead))``.
    """

    dead: tuple[Cell, ...]
    forbidden: frozenset[Cell]
    queue: tuple[tuple[Cell, Orientation], ...]
    cells: int
    history: tuple[str, ...] = field(default=())

    @classmethod
    def seed(cls, dim: int) -> Configuration:
        origin = (0,) * dim
        return cls((), frozenset(), ((origin, Orientation.identity(dim)),), 1)

    @property
    def weight(self) -> tuple[int, int]:
        return (self.cells - 1, len(self.dead))

    @property
    def is_closed(self) -> bool:
        return not self.queue

    def occupied(self) -> set[Cell]:
        return set(self.dead) | {c for c, _ in self.queue}


def condition_star(t: Configuration, placed_whites, placed_forbidden=(), second_clause: bool = False) -> bool:
    """Overlap test: new twig cells avoid dead, queued and forbidden cells.

    Only the twig's own cells are tested.  Its forbidden cells may land
    anywhere, including on cells of ``t``.  ``second_clause`` additionally
    rejects forbidden cells landing on cells of ``t``; this loses animals and
    exists only to demonstrate that.
    """
    taken = t.occupied() | t.forbidden
    if any(c in taken for c, _ in placed_whites):
        return False
    if second_clause:
        occ = t.occupied()
        return not any(c in occ for c in placed_forbidden)
    return True


class EmptyQueueError(ValueError):
    """Extending a configuration that has no open cell."""


def extend(t: Configuration, twig: Twig, second_clause: bool = False) -> Configuration | None:
    """``t * twig``, or ``None`` when the placement is rejected."""
    if not t.queue:
        raise EmptyQueueError("configuration has no open cell")
    (u, o), rest = t.queue[0], t.queue[1:]
    whites = twig.placed_whites(u, o)
    forbidden = twig.placed_forbidden(u, o)
    if not condition_star(t, whites, forbidden, second_clause):
        return None
    return Configuration(
        t.dead + (u,),
        t.forbidden | frozenset(forbidden),
        rest + tuple(whites),
        t.cells + len(whites),
        t.history + (twig.name,),
    )


def iter_completed(twigs: TwigSet, i: int, start: Configuration | None = None, second_clause: bool = False):
    """Yield every completed configuration of ``C_i`` (depth first)."""
    if i < 1:
        raise ValueError("i must be at least 1")
    stack = [start or Configuration.seed(twigs.dim)]
    while stack:
        t = stack.pop()
        for twig in reversed(twigs.twigs):
            child = extend(t, twig, second_clause)
            if child is None:
                continue
            if child.is_closed or len(child.dead) == i:
                yield child
            else:
                stack.append(child)


def reference_weight_counts(twigs: TwigSet, i: int, second_clause: bool = False) -> Counter:
    """``{(a, b): count}`` for ``C_i`` using the reference engine."""
    return Counter(t.weight for t in iter_completed(twigs, i, second_clause=second_clause))
