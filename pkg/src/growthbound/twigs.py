"""Twigs, twig sequences, and the breadth-first encode/decode shared by 2D and 3D.

A twig is given in its canonical frame: the black root sits at the origin,
the open (white) cells are listed in queue order together with the context
orientation each of them receives, and the forbidden cells are the ones the
twig certifies will never become new cells.  Placing a twig over an open
cell ``u`` with orientation ``o`` maps every canonical offset ``v`` to
``u + o(v)`` and every white orientation ``w`` to ``o . w``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .animals import Animal, InvalidAnimalError
from .geom import Cell, Orientation, add, lex_key


class Monomial(NamedTuple):
    """``x**a * y**b``."""

    a: int
    b: int

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(self.a + other.a, self.b + other.b)

    def __str__(self) -> str:
        return f"x^{self.a} y^{self.b}"


@dataclass(frozen=True)
class Twig:
    name: str
    whites: tuple[tuple[Cell, Orientation], ...]
    forbidden: frozenset[Cell]

    def __post_init__(self):
        root = self.root
        cells = [c for c, _ in self.whites]
        if root in cells or len(set(cells)) != len(cells):
            raise ValueError(f"{self.name}: white cells must be distinct and avoid the root")
        if self.forbidden & (set(cells) | {root}):
            raise ValueError(f"{self.name}: forbidden cells overlap the twig")

    @property
    def dim(self) -> int:
        return self.whites[0][1].dim if self.whites else len(next(iter(self.forbidden)))

    @property
    def root(self) -> Cell:
        return (0,) * self.dim

    @property
    def weight(self) -> Monomial:
        # one black cell; x counts every cell but one
        return Monomial(len(self.whites), 1)

    def placed_whites(self, u: Cell, o: Orientation) -> list[tuple[Cell, Orientation]]:
        return [(add(u, o.apply(c)), o.compose(w)) for c, w in self.whites]

    def placed_forbidden(self, u: Cell, o: Orientation) -> list[Cell]:
        return [add(u, o.apply(c)) for c in self.forbidden]


@dataclass(frozen=True)
class TwigSet:
    """An ordered family of twigs plus the context of the root cell."""

    dim: int
    twigs: tuple[Twig, ...]
    context: frozenset[Cell]

    def __len__(self) -> int:
        return len(self.twigs)

    def __iter__(self):
        return iter(self.twigs)

    def __getitem__(self, key: int | str) -> Twig:
        if isinstance(key, str):
            return self.by_name[key]
        return self.twigs[key]

    @property
    def by_name(self) -> dict[str, Twig]:
        return {t.name: t for t in self.twigs}

    def weight_sum(self):
        from .polyalg import BiPoly

        return BiPoly.sum_monomials(t.weight for t in self.twigs)


@dataclass(frozen=True)
class TwigSequence:
    dim: int
    items: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        return " ".join(self.items)


def sequence_weight(seq: TwigSequence | Sequence[Twig], twigs: TwigSet | None = None) -> Monomial:
    """``x`` times the product of the twig weights; the empty sequence weighs ``x``."""
    if isinstance(seq, TwigSequence):
        if twigs is None:
            from .twigs2d import canonical_twigs_2d
            from .twigs3d import canonical_twigs_3d

            twigs = canonical_twigs_2d() if seq.dim == 2 else canonical_twigs_3d()
        seq = [twigs[name] for name in seq.items]
    w = Monomial(1, 0)
    for t in seq:
        w = w * t.weight
    return w


class EncodingError(RuntimeError):
    """No twig, or more than one, matched during encoding (a completeness failure)."""


class InvalidSequenceError(ValueError):
    """The sequence does not describe an animal."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


def encode(animal: Animal, twigs: TwigSet) -> TwigSequence:
    """Breadth-first twig encoding starting from the lexicographically smallest cell.

    At every dequeued cell exactly one twig must match: all of its white
    cells are unlabeled cells of the animal and none of its forbidden cells
    is.  Anything else is reported as :class:`EncodingError`.
    """
    if animal.dim != twigs.dim:
        raise InvalidAnimalError(f"{animal.dim}D animal given to a {twigs.dim}D twig set")
    cells = animal.cells
    root = min(cells, key=lex_key)
    labeled = {root}
    queue = deque([(root, Orientation.identity(twigs.dim))])
    out = []

    def new(c: Cell) -> bool:
        return c in cells and c not in labeled

    while queue:
        u, o = queue.popleft()
        matches = [
            t
            for t in twigs
            if all(new(c) for c, _ in t.placed_whites(u, o))
            and not any(new(c) for c in t.placed_forbidden(u, o))
        ]
        if len(matches) != 1:
            raise EncodingError(
                f"{len(matches)} twigs match at cell {u} ({[t.name for t in matches]})"
            )
        twig = matches[0]
        for c, w in twig.placed_whites(u, o):
            labeled.add(c)
            queue.append((c, w))
        out.append(twig.name)
    if labeled != cells:
        raise EncodingError(f"{len(cells) - len(labeled)} cells were never reached")
    return TwigSequence(twigs.dim, tuple(out))


def decode(seq: TwigSequence | Sequence[str], twigs: TwigSet) -> Animal:
    """Replay the queue construction; raise :class:`InvalidSequenceError` on failure."""
    items = seq.items if isinstance(seq, TwigSequence) else tuple(seq)
    by_name = twigs.by_name
    origin = (0,) * twigs.dim
    occupied = {origin}
    forbidden: set[Cell] = set()
    queue = deque([(origin, Orientation.identity(twigs.dim))])
    for step, name in enumerate(items):
        if name not in by_name:
            raise InvalidSequenceError(step, f"unknown twig {name!r}")
        if not queue:
            raise InvalidSequenceError(step, "no open cell left")
        u, o = queue.popleft()
        twig = by_name[name]
        for c, w in twig.placed_whites(u, o):
            if c in occupied:
                raise InvalidSequenceError(step, f"cell {c} already occupied")
            if c in forbidden:
                raise InvalidSequenceError(step, f"cell {c} is forbidden")
            occupied.add(c)
            queue.append((c, w))
        forbidden.update(twig.placed_forbidden(u, o))
    if queue:
        raise InvalidSequenceError(len(items), f"{len(queue)} open cells remain")
    return Animal(frozenset(occupied))
