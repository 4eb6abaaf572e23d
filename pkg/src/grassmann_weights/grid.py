"""Schubert-union grids inside I(2, m).

A grid point ``(x, y)`` with ``1 <= x < y <= m`` stands for the Schubert
variety ``S_(x,y)``.  Column ``x`` of the triangle holds the points
``(x, x+1), ..., (x, m)``; a union of order ideals is determined by how many
points it takes from the bottom of each column, and those counts are
strictly decreasing.  :class:`ColumnProfile` stores exactly that sequence and
is the normal form used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_M = 64


class GridError(ValueError):
    """Invalid grid data.  ``reason`` is a short machine-readable code."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def check_m(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise GridError("bad_m", f"m must be an integer, got {m!r}")
    if not 2 <= m <= MAX_M:
        raise GridError("bad_m", f"m must satisfy 2 <= m <= {MAX_M}, got {m}")


@dataclass(frozen=True, order=True)
class GridCoord:
    x: int
    y: int

    def __post_init__(self):
        if not 1 <= self.x < self.y:
            raise GridError("bad_point", f"need 1 <= x < y, got ({self.x}, {self.y})")

    def check(self, m: int) -> None:
        if self.y > m:
            raise GridError("bad_point", f"({self.x}, {self.y}) lies outside I(2,{m})")

    def below(self, other: GridCoord) -> bool:
        """Componentwise (Bruhat) order; ``<`` on the dataclass is only for sorting."""
        return self.x <= other.x and self.y <= other.y

    def __iter__(self):
        yield self.x
        yield self.y

    @property
    def dimension(self) -> int:
        return cell_dimension(self.x, self.y)

    @property
    def cardinality(self) -> int:
        return cardinality(self.x, self.y)


def _profile_problem(m: int, heights: tuple[int, ...]) -> GridError | None:
    for h in heights:
        if h <= 0:
            return GridError("non_positive", f"column heights must be positive: {heights}")
    for a, b in zip(heights, heights[1:]):
        if a <= b:
            return GridError("non_strict", f"column heights must strictly decrease: {heights}")
    if heights and heights[0] > m - 1:
        return GridError("too_tall", f"first column height {heights[0]} exceeds m-1={m - 1}")
    return None


@dataclass(frozen=True)
class ColumnProfile:
    """Heights ``c_1 > c_2 > ... > c_t > 0`` of the columns of a grid ``I_U``."""

    m: int
    heights: tuple[int, ...] = ()

    def __post_init__(self):
        check_m(self.m)
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        err = _profile_problem(self.m, self.heights)
        if err is not None:
            raise err

    @classmethod
    def full(cls, m: int) -> ColumnProfile:
        return cls(m, tuple(range(m - 1, 0, -1)))

    @classmethod
    def empty(cls, m: int) -> ColumnProfile:
        return cls(m, ())

    @property
    def area(self) -> int:
        return sum(self.heights)

    def height(self, x: int) -> int:
        """Height of column ``x`` (1-based), zero past the last column."""
        return self.heights[x - 1] if 1 <= x <= len(self.heights) else 0

    def points(self) -> Iterator[GridCoord]:
        for x, c in enumerate(self.heights, start=1):
            for y in range(x + 1, x + c + 1):
                yield GridCoord(x, y)

    def point_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((p.x, p.y) for p in self.points())

    def __contains__(self, point) -> bool:
        x, y = point
        return 1 <= x < y <= x + self.height(x)

    def contains(self, other: ColumnProfile) -> bool:
        """Grid inclusion ``I_other ⊂ I_self``."""
        return all(c <= self.height(x) for x, c in enumerate(other.heights, start=1))

    def corners(self) -> CornerSet:
        return corners_from_profile(self)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.heights)) + ")"


@dataclass(frozen=True)
class CornerSet:
    """An antichain of grid points; the union of their order ideals is ``I_U``."""

    m: int
    corners: frozenset[GridCoord] = frozenset()

    def __post_init__(self):
        check_m(self.m)
        pts = frozenset(p if isinstance(p, GridCoord) else GridCoord(*p) for p in self.corners)
        for p in pts:
            p.check(self.m)
        for a in pts:
            for b in pts:
                if a != b and a.below(b):
                    raise GridError(
                        "not_antichain", f"corner {tuple(a)} lies below corner {tuple(b)}"
                    )
        object.__setattr__(self, "corners", pts)

    @classmethod
    def from_points(cls, m: int, points: Iterable) -> CornerSet:
        """Keep only the maximal points.  Degenerate points ``(0, b)`` describe
        the empty grid and are dropped."""
        pts = set()
        for p in points:
            x, y = p
            if x == 0:
                continue
            pts.add(GridCoord(x, y))
        maximal = {a for a in pts if not any(a != b and a.below(b) for b in pts)}
        return cls(m, frozenset(maximal))

    def sorted(self) -> list[GridCoord]:
        return sorted(self.corners)

    def as_tuples(self) -> list[tuple[int, int]]:
        return [(p.x, p.y) for p in self.sorted()]

    def __len__(self) -> int:
        return len(self.corners)

    def __iter__(self):
        return iter(self.sorted())


def validate_profile(m: int, heights: Iterable[int]) -> ColumnProfile:
    return ColumnProfile(m, tuple(heights))


def profile_error(m: int, heights: Iterable[int]) -> str | None:
    """Reason code if ``heights`` is not a valid profile for ``m``, else None."""
    try:
        validate_profile(m, heights)
    except GridError as exc:
        return exc.reason
    return None


def grid_from_corners(corners: CornerSet) -> ColumnProfile:
    m = corners.m
    heights = []
    for x in range(1, m):
        h = max((p.y - x for p in corners.corners if p.x >= x), default=0)
        if h == 0:
            break
        heights.append(h)
    return ColumnProfile(m, tuple(heights))


def corners_from_profile(profile: ColumnProfile) -> CornerSet:
    tops = [(x, x + c) for x, c in enumerate(profile.heights, start=1)]
    return CornerSet.from_points(profile.m, tops)


def intersect_corners(alphas: Iterable) -> GridCoord:
    """The point ``γ`` with ``I_γ = ∩ I_α`` (componentwise minimum)."""
    pts = [a if isinstance(a, GridCoord) else GridCoord(*a) for a in alphas]
    if not pts:
        raise GridError("empty", "cannot intersect an empty set of Schubert varieties")
    return GridCoord(min(p.x for p in pts), min(p.y for p in pts))


def cardinality(x: int, y: int) -> int:
    """Number of points of ``I_(x,y)``: ``xy - x(x+1)/2``."""
    if not 1 <= x < y:
        raise GridError("bad_point", f"need 1 <= x < y, got ({x}, {y})")
    return x * y - x * (x + 1) // 2


def cell_dimension(x: int, y: int) -> int:
    """Krull dimension of ``S_(x,y)``; also the index of the diagonal holding it."""
    if not 1 <= x < y:
        raise GridError("bad_point", f"need 1 <= x < y, got ({x}, {y})")
    return x + y - 3


def area(profile: ColumnProfile) -> int:
    return profile.area


def diagonal(m: int, d: int) -> list[GridCoord]:
    """Points of ``I(2, m)`` on ``D_d``, ordered by increasing ``x``."""
    lo = max(d + 2 - m, 0)
    return [GridCoord(x, d + 3 - x) for x in range(lo + 1, m) if 2 * x < d + 3]


def grid_points(m: int) -> Iterator[GridCoord]:
    for x in range(1, m):
        for y in range(x + 1, m + 1):
            yield GridCoord(x, y)


def iter_profiles(m: int) -> Iterator[ColumnProfile]:
    """Every valid profile for ``m`` (there are ``2**(m-1)``)."""
    check_m(m)
    parts = range(m - 1, 0, -1)
    for t in range(m):
        for combo in combinations(parts, t):
            yield ColumnProfile(m, combo)
