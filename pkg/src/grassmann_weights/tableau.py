"""The Young diagram Y_m and its strict subtableaux.

Row ``i`` of ``Y_m`` has ``m - i`` boxes and box ``j`` of that row holds
``2i + j - 3``.  A strict subtableau keeps the first ``λ_i`` boxes of rows
``1..t`` with ``λ_1 > ... > λ_t > 0``.  Reading rows of ``Y_m`` as columns of
the grid ``I(2, m)`` turns a subtableau into a column profile with the same
numbers, and the entries become the Krull dimensions of the grid points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .grid import ColumnProfile, GridError, check_m
from .qpoly import QPoly


@dataclass(frozen=True)
class YoungDiagram:
    m: int

    def __post_init__(self):
        check_m(self.m)

    def row_length(self, i: int) -> int:
        return self.m - i

    def entry(self, row: int, box: int) -> int:
        if not (1 <= row <= self.m - 1 and 1 <= box <= self.m - row):
            raise GridError("bad_box", f"no box ({row}, {box}) in Y_{self.m}")
        return 2 * row + box - 3

    def rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.m - i + 1)] for i in range(1, self.m)]


def build_young(m: int) -> YoungDiagram:
    return YoungDiagram(m)


@dataclass(frozen=True)
class StrictSubtableau:
    m: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        # same shape rules as a column profile
        ColumnProfile(self.m, self.rows)

    @property
    def area(self) -> int:
        return sum(self.rows)

    def entries(self) -> Iterator[int]:
        for i, length in enumerate(self.rows, start=1):
            for j in range(1, length + 1):
                yield 2 * i + j - 3


def gamma(s: StrictSubtableau) -> QPoly:
    """Polynomial whose ``q^d`` coefficient counts the boxes of ``s`` holding ``d``."""
    return QPoly.from_exponents(s.entries())


def subtableaux_of_area(m: int, r: int) -> Iterator[StrictSubtableau]:
    """All strict subtableaux of ``Y_m`` with ``r`` boxes, in decreasing
    lexicographic order of their row-length sequences."""
    check_m(m)
    k = m * (m - 1) // 2
    if not 0 <= r <= k:
        raise GridError("bad_area", f"area {r} outside 0..{k}")

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        # parts below cap sum to at most cap*(cap+1)/2
        for part in range(min(cap, remaining), 0, -1):
            if part * (part + 1) // 2 < remaining:
                break
            yield from rec(remaining - part, part - 1, prefix + (part,))

    for rows in rec(r, m - 1, ()):
        yield StrictSubtableau(m, rows)


def count_subtableaux_by_area(m: int) -> list[int]:
    """Number of strict subtableaux of each area ``0..k`` (subset-sum counting)."""
    k = m * (m - 1) // 2
    counts = [1] + [0] * k
    for part in range(1, m):
        for a in range(k, part - 1, -1):
            counts[a] += counts[a - part]
    return counts


def profile_of(s: StrictSubtableau) -> ColumnProfile:
    """Row ``i`` of ``Y_m`` is column ``i`` of ``I(2, m)``, read from the bottom."""
    return ColumnProfile(s.m, s.rows)


def subtableau_of(p: ColumnProfile) -> StrictSubtableau:
    return StrictSubtableau(p.m, p.heights)
