"""Recompute the published tables at desk scale and diff them against the fixtures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from decimal import Decimal
from functools import lru_cache

from . import formats
from .bounds import diagonal_radius_bound
from .enumerator import build_weight_sum, closed_twig_census, extend, reference_weight_counts
from .enumerator.config import Configuration
from .oracle import count_fixed, enumerate_fixed
from .polyalg import series_diagonal
from .twigs2d import canonical_twigs_2d, decode_twigs

TOLERANCE = Decimal("1e-9")
SUITES = ("table1", "table3", "appendixB", "appendixA", "oracle")
DESK_2D = 12
DESK_3D = 5


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    got: str
    ok: bool

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        if self.ok:
            return f"{tag} {self.name}: {self.got}"
        return f"{tag} {self.name}: expected {self.expected}, got {self.got}"


@lru_cache(maxsize=None)
def weight_sum(d: int, i: int, workers: int = 1):
    return build_weight_sum(d, i, workers)


@lru_cache(maxsize=None)
def bound_for(d: int, i: int, workers: int = 1):
    return diagonal_radius_bound(weight_sum(d, i, workers).poly, d=d, i=i)


def _bound_check(name: str, expected: str, d: int, i: int, workers: int) -> Check:
    b = bound_for(d, i, workers)
    diff = abs(b.value - Decimal(expected))
    return Check(name, expected, f"{b.value:.12f} (diff {diff:.1e})", diff <= TOLERANCE)


def _table(d: int, rows: list[dict], upto: int, workers: int) -> list[Check]:
    out = []
    for row in rows:
        i = int(row["i"])
        if i > upto:
            break
        ws = weight_sum(d, i, workers)
        out.append(Check(f"d={d} i={i} count", row["count"], str(ws.count), ws.count == int(row["count"])))
        out.append(_bound_check(f"d={d} i={i} 1/sigma", row["bound"], d, i, workers))
    return out


def suite_table1(upto: int = DESK_2D, workers: int = 1) -> list[Check]:
    return _table(2, formats.table_2d(), upto, workers)


def suite_table3(upto: int = DESK_3D, workers: int = 1) -> list[Check]:
    return _table(3, formats.table_3d(), upto, workers)


def suite_appendix_b(upto: int = DESK_2D, workers: int = 1) -> list[Check]:
    out = []
    for i, expected in sorted(formats.weights_2d().items()):
        if i > upto:
            break
        got = weight_sum(2, i, workers).poly
        diff = got - expected
        detail = "identical" if not diff else f"{len(diff)} coefficients differ, e.g. {diff.sorted_terms()[:3]}"
        out.append(Check(f"W_{i}", f"{len(expected)} terms", detail, not diff))
        out.append(Check(f"W_{i}(1,1) = |C_{i}|", str(expected.count()), str(got.count()), got.count() == expected.count()))
    return out


def suite_appendix_a(workers: int = 1) -> list[Check]:
    twigs = canonical_twigs_2d()
    L = twigs.by_name
    out = []
    census = closed_twig_census(2, 4, workers)
    for b, want in ((1, 1), (2, 2), (3, 6)):
        out.append(Check(f"closed twigs with {b} dead cells", str(want), str(census[b]), census[b] == want))
    c4 = weight_sum(2, 4, workers).count
    out.append(Check("|C_4|", "409", str(c4), c4 == 409))
    ref = sum(reference_weight_counts(twigs, 4).values())
    out.append(Check("|C_4| (reference engine)", "409", str(ref), ref == 409))

    # the twenty sequences L3 * {L2, L3} * any * {L4, L5} that overlap
    rejected = 0
    for mid, third, last in itertools.product(("L2", "L3"), twigs.by_name, ("L4", "L5")):
        t = Configuration.seed(2)
        for name in ("L3", mid, third):
            t = extend(t, L[name])
        if t is not None and t.queue and extend(t, L[last]) is None:
            rejected += 1
    out.append(Check("overlap rejections after L3*L2 and L3*L3", "20", str(rejected), rejected == 20))

    four = 0
    for seq in itertools.product(twigs.by_name, repeat=4):
        t = Configuration.seed(2)
        for name in seq:
            if t is None or not t.queue:
                t = None
                break
            t = extend(t, L[name])
        four += t is not None
    out.append(Check("valid four-twig sequences", "400", str(four), four == 400))

    strict = sum(reference_weight_counts(twigs, 4, second_clause=True).values())
    out.append(Check("second clause shrinks C_4", "< 409", str(strict), strict < 409))
    p = decode_twigs(["L3", "L2", "L4", "L1", "L1"])
    out.append(Check("L3 L2 L4 L1 L1 is a pentomino", "5 cells", f"{len(p)} cells", len(p) == 5))
    return out


def suite_oracle(n_2d: int = 10, n_3d: int = 5) -> list[Check]:
    out = []
    for d, n in ((2, 8), (3, 5)):
        table = count_fixed(d, n)
        for k in range(1, n + 1):
            streamed = sum(1 for _ in enumerate_fixed(d, k))
            out.append(Check(f"A_{d}({k}) counter = stream", str(table[k]), str(streamed), streamed == table[k]))
    a2 = count_fixed(2, n_2d)
    diag = series_diagonal(weight_sum(2, 1).poly, n_2d)
    for n in range(1, n_2d + 1):
        out.append(Check(f"A_2({n}) <= c_1({n},{n})", f">= {a2[n]}", str(diag[n]), a2[n] <= diag[n]))
    a3 = count_fixed(3, n_3d)
    diag3 = series_diagonal(weight_sum(3, 1).poly, n_3d)
    for n in range(1, n_3d + 1):
        out.append(Check(f"A_3({n}) <= c^3_1({n},{n})", f">= {a3[n]}", str(diag3[n]), a3[n] <= diag3[n]))
    return out


def run_suite(name: str, workers: int = 1) -> list[Check]:
    if name == "table1":
        return suite_table1(workers=workers)
    if name == "table3":
        return suite_table3(workers=workers)
    if name == "appendixB":
        return suite_appendix_b(workers=workers)
    if name == "appendixA":
        return suite_appendix_a(workers=workers)
    if name == "oracle":
        return suite_oracle()
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
