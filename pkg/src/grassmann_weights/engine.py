"""Higher weights of the Grassmann code C(2, m).

Two routes are provided.  The exact route maximises the point count over
every Schubert union of a given spanning dimension.  The ``lr`` route only
looks at the two extremal unions ``S_L`` (fill columns from the left) and
``S_R`` (fill rows from the bottom); it agrees with the exact route once
``q`` is large.  The admissibility helpers describe which grid points can be
the top-dimensional component of an optimal union.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .grid import (
    ColumnProfile,
    CornerSet,
    GridCoord,
    cardinality,
    check_m,
    diagonal,
)
from .qpoly import QPoly, evaluate, g_profile, lex_cmp, n_points
from .tableau import gamma, profile_of, subtableaux_of_area

MAX_HIERARCHY_M = 30
LARGE_Q = 101


class EngineError(ValueError):
    pass


class ClosedFormMismatch(AssertionError):
    """A closed-form weight disagrees with the exact engine."""

    def __init__(self, m: int, r: int, q: int, which: str, closed: int, exact: int):
        super().__init__(
            f"closed form for {which} at m={m}, r={r}, q={q} gives {closed}, exact engine gives {exact}"
        )
        self.m, self.r, self.q = m, r, q
        self.which = which
        self.closed = closed
        self.exact = exact


def _dimension(m: int) -> int:
    return m * (m - 1) // 2


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise EngineError(f"q must be an integer >= 2, got {q!r}")


def _check_K(m: int, K: int, lo: int = 0) -> None:
    k = _dimension(m)
    if not lo <= K <= k:
        raise EngineError(f"spanning dimension {K} outside {lo}..{k} for m={m}")


def _canonical(profiles) -> tuple[ColumnProfile, ...]:
    return tuple(sorted(set(profiles), key=lambda p: p.heights, reverse=True))


# -- thresholds and the two extremal unions ---------------------------------


@dataclass(frozen=True)
class ThresholdTable:
    """``nu[i] = 1 + ... + i`` (bottom rows) and ``mu[i] = (m-1) + ... + (m-i)``
    (left columns) for ``i = 0 .. m-1``."""

    m: int
    nu: tuple[int, ...]
    mu: tuple[int, ...]

    def column_count(self, K: int) -> int:
        """The ``x`` with ``mu[x] < K <= mu[x+1]``."""
        return next(x for x in range(self.m - 1) if self.mu[x] < K <= self.mu[x + 1])

    def row_count(self, K: int) -> int:
        """The ``z`` with ``nu[z] < K <= nu[z+1]``."""
        return next(z for z in range(self.m - 1) if self.nu[z] < K <= self.nu[z + 1])


@lru_cache(maxsize=None)
def thresholds(m: int) -> ThresholdTable:
    check_m(m)
    nu = tuple(i * (i + 1) // 2 for i in range(m))
    mu = tuple(sum(m - j for j in range(1, i + 1)) for i in range(m))
    return ThresholdTable(m, nu, mu)


def s_L_corners(m: int, K: int) -> CornerSet:
    """Corners ``(x, m)`` and ``(x+1, K - mu_x + x + 1)`` of ``S_L``."""
    _check_K(m, K)
    if K == 0:
        return CornerSet(m)
    t = thresholds(m)
    x = t.column_count(K)
    return CornerSet.from_points(m, [(x, m), (x + 1, K - t.mu[x] + x + 1)])


def s_R_corners(m: int, K: int) -> CornerSet:
    """Corners ``(z, z+1)`` and ``(K - nu_z, z+2)`` of ``S_R``."""
    _check_K(m, K)
    if K == 0:
        return CornerSet(m)
    t = thresholds(m)
    z = t.row_count(K)
    return CornerSet.from_points(m, [(z, z + 1), (K - t.nu[z], z + 2)])


def s_L(m: int, K: int) -> ColumnProfile:
    """Fill whole columns from the left, then the bottom of the next column."""
    _check_K(m, K)
    heights = []
    left = K
    for h in range(m - 1, 0, -1):
        if left == 0:
            break
        take = min(h, left)
        heights.append(take)
        left -= take
    return ColumnProfile(m, tuple(heights))


def s_R(m: int, K: int) -> ColumnProfile:
    """Fill whole rows from the bottom, then the left of the next row."""
    _check_K(m, K)
    if K == 0:
        return ColumnProfile.empty(m)
    t = thresholds(m)
    z = t.row_count(K)
    extra = K - t.nu[z]
    # rows y = 2..z+1 are full; row z+2 holds x = 1..extra
    heights = [(z + 1 - x) + (1 if x <= extra else 0) for x in range(1, z + 2)]
    return ColumnProfile(m, tuple(h for h in heights if h > 0))


class Winner(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TIE = "tie"


@dataclass(frozen=True)
class LRChoice:
    winner: Winner
    gL: QPoly
    gR: QPoly
    left: ColumnProfile
    right: ColumnProfile

    @property
    def best(self) -> QPoly:
        return self.gR if self.winner is Winner.RIGHT else self.gL


def lr_choice(m: int, K: int) -> LRChoice:
    """Compare ``g(S_L)`` and ``g(S_R)`` in the lexicographic order."""
    left, right = s_L(m, K), s_R(m, K)
    gL, gR = g_profile(left), g_profile(right)
    c = lex_cmp(gL, gR)
    winner = Winner.LEFT if c > 0 else Winner.RIGHT if c < 0 else Winner.TIE
    return LRChoice(winner, gL, gR, left, right)


# -- exact maximisation ------------------------------------------------------


def max_gamma(m: int, r: int, q: int) -> tuple[int, tuple[ColumnProfile, ...]]:
    """Largest ``γ(T)(q)`` over strict subtableaux ``T`` of area ``r``, by enumeration.

    Returns the value and every profile attaining it.
    """
    _check_q(q)
    best = -1
    witnesses: list[ColumnProfile] = []
    for s in subtableaux_of_area(m, r):
        v = evaluate(gamma(s), q)
        if v > best:
            best, witnesses = v, [profile_of(s)]
        elif v == best:
            witnesses.append(profile_of(s))
    return best, _canonical(witnesses)


def _column_values(m: int, q: int) -> list[list[int]]:
    """``vals[x][c]``: points contributed by column ``x`` holding ``c`` boxes."""
    vals = [[0] * m for _ in range(m + 1)]
    for x in range(1, m):
        base = q ** (2 * x - 2)
        acc = 0
        for c in range(1, m - x + 1):
            acc += base * q ** (c - 1)
            vals[x][c] = acc
    return vals


def best_by_area(m: int, q: int) -> list[tuple[int, tuple[ColumnProfile, ...]]]:
    """For every area ``r = 0..k``: the maximal point count and all profiles attaining it.

    Dynamic programme over columns; exact, and equal to exhaustive enumeration.
    """
    check_m(m)
    _check_q(q)
    k = _dimension(m)
    vals = _column_values(m, q)

    # table[h][a] for columns x.. with c_x <= h: (value, set of height tails)
    nxt = [[None] * (k + 1) for _ in range(m)]
    for h in range(m):
        nxt[h][0] = (0, {()})
    for x in range(m - 1, 0, -1):
        cur = [[None] * (k + 1) for _ in range(m)]
        cur[0][0] = (0, {()})
        for h in range(1, m):
            row = list(cur[h - 1])
            if h <= m - x:
                tails = nxt[h - 1]
                gain = vals[x][h]
                for a, entry in enumerate(tails):
                    if entry is None or a + h > k:
                        continue
                    v = entry[0] + gain
                    prev = row[a + h]
                    if prev is None or v > prev[0]:
                        row[a + h] = (v, {(h,) + t for t in entry[1]})
                    elif v == prev[0]:
                        row[a + h] = (v, prev[1] | {(h,) + t for t in entry[1]})
            cur[h] = row
        nxt = cur
    top = nxt[m - 1]
    out = []
    for a in range(k + 1):
        v, tails = top[a]
        out.append((v, _canonical(ColumnProfile(m, t) for t in tails)))
    return out


# -- hierarchies -------------------------------------------------------------


class Method(str, Enum):
    EXACT = "exact"
    LR = "lr"


@dataclass(frozen=True)
class WeightHierarchy:
    """``weights[i-1] = d_i = n - J_i`` for ``i = 1..k``."""

    m: int
    q: int
    n: int
    k: int
    method: Method
    weights: tuple[int, ...]
    maxima: tuple[int, ...]
    witnesses: tuple[tuple[ColumnProfile, ...], ...] = field(repr=False)

    def d(self, i: int) -> int:
        if not 1 <= i <= self.k:
            raise IndexError(f"weight index {i} outside 1..{self.k}")
        return self.weights[i - 1]

    @property
    def large_q_only(self) -> bool:
        """The lr route is only guaranteed exact for large ``q``."""
        return self.method is Method.LR

    def is_strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.weights, self.weights[1:]))


def _check_hierarchy_args(m: int, q: int) -> None:
    if not isinstance(m, int) or not 2 <= m <= MAX_HIERARCHY_M:
        raise EngineError(f"m must satisfy 2 <= m <= {MAX_HIERARCHY_M}, got {m!r}")
    _check_q(q)


def hierarchy(m: int, q: int, method: Method | str = Method.EXACT) -> WeightHierarchy:
    """The full weight hierarchy ``d_1..d_k`` of C(2, m) over F_q."""
    method = Method(method)
    _check_hierarchy_args(m, q)
    k = _dimension(m)
    n = evaluate(n_points(m), q)
    weights, maxima, witnesses = [], [], []
    if method is Method.EXACT:
        table = best_by_area(m, q)
        for i in range(1, k + 1):
            J, wit = table[k - i]
            maxima.append(J)
            weights.append(n - J)
            witnesses.append(wit)
    else:
        for i in range(1, k + 1):
            choice = lr_choice(m, k - i)
            vL, vR = evaluate(choice.gL, q), evaluate(choice.gR, q)
            J = max(vL, vR)
            wit = [p for p, v in ((choice.left, vL), (choice.right, vR)) if v == J]
            maxima.append(J)
            weights.append(n - J)
            witnesses.append(_canonical(wit))
    return WeightHierarchy(m, q, n, k, method, tuple(weights), tuple(maxima), tuple(witnesses))


def method_differences(m: int, q: int) -> list[tuple[int, int, int]]:
    """Indices ``i`` where the lr route misses the exact ``d_i``, as ``(i, exact, lr)``.

    Exploratory only: no result here is claimed to hold for every ``q``.
    """
    ex = hierarchy(m, q, Method.EXACT)
    lr = hierarchy(m, q, Method.LR)
    return [(i, a, b) for i, (a, b) in enumerate(zip(ex.weights, lr.weights), start=1) if a != b]


# -- diagonals and admissibility ---------------------------------------------


def C_of_d(m: int, d: int) -> int:
    """Smallest cardinality on the diagonal ``D_d``; attained at an endpoint."""
    check_m(m)
    if not 0 <= d <= 2 * m - 4:
        raise EngineError(f"diagonal index {d} outside 0..{2 * m - 4}")
    pts = diagonal(m, d)
    return min(cardinality(*pts[0]), cardinality(*pts[-1]))


def C_of_d_scan(m: int, d: int) -> int:
    """Same quantity by scanning the whole diagonal."""
    return min(cardinality(*p) for p in diagonal(m, d))


def max_krull_d(m: int, K: int) -> int:
    """Largest ``d`` with ``C(d) <= K``: the top dimension reachable with ``K`` boxes."""
    _check_K(m, K, lo=1)
    return max(d for d in range(2 * m - 3) if C_of_d(m, d) <= K)


def _as_point(m: int, p) -> GridCoord:
    p = p if isinstance(p, GridCoord) else GridCoord(*p)
    p.check(m)
    return p


def is_admissible(m: int, p) -> bool:
    """``c(p) < C(d+1)`` for ``p`` on ``D_d``; the top diagonal counts as admissible."""
    check_m(m)
    p = _as_point(m, p)
    d = p.dimension
    if d == 2 * m - 4:
        return True
    return p.cardinality < C_of_d(m, d + 1)


def admissible_by_lemma(m: int, p) -> bool:
    """Closed-form admissibility test for ``m > 10``.

    Off the small diagonals this only encodes necessary conditions, so a
    ``True`` answer means "not excluded".  For ``m <= 10`` the direct
    predicate is used instead.
    """
    check_m(m)
    p = _as_point(m, p)
    if m <= 10:
        return is_admissible(m, p)
    x, y = p.x, p.y
    d = p.dimension
    if d <= m - 3:
        return x == 1 or (x, y) == (2, 3)
    ok = d + 3 - m <= x <= d + 4 - m or d <= 2 * x <= d + 2
    if m == 11 and (x, y) == (4, 9):
        ok = True
    odd = (x + m) % 2 == 1
    if y == m:
        ok = ok and (x >= m - 3 or 5 * x <= m + (10 if odd else 5))
    elif y == m - 1:
        ok = ok and (x >= m - 4 or 5 * x <= m + (5 if odd else 10))
    return ok


def admissibility_map(m: int) -> list[dict]:
    """Every grid point with its cost, diagonal and both admissibility verdicts."""
    check_m(m)
    rows = []
    for x in range(1, m):
        for y in range(x + 1, m + 1):
            rows.append(
                {
                    "x": x,
                    "y": y,
                    "d": x + y - 3,
                    "cost": cardinality(x, y),
                    "admissible": is_admissible(m, (x, y)),
                    "lemma": admissible_by_lemma(m, (x, y)),
                }
            )
    return rows


# -- closed form for the second and second-to-last blocks of weights ----------


def _geometric(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1))


def closed_form_terms(m: int, r: int, reading: str = "consistent") -> tuple[list[int], list[int]]:
    """Exponents of the monomials in the two closed forms, with ``δ = 2m - 4``.

    The first list sums to ``d_r``; the second is subtracted from ``n`` to
    give ``d_{k-r}``.  ``reading="literal"`` ends the second ``d_r`` run at
    ``δ - r + m`` as printed, which gives ``r - 2`` monomials instead of
    ``r``; ``"consistent"`` ends it at ``δ - r + m - 2``, i.e. the grid
    complement of ``S_R`` (top row plus the right end of the row below).
    """
    if not 4 < m < r <= 2 * m - 5:
        raise EngineError(f"closed form needs 4 < m < r <= 2m-5, got m={m}, r={r}")
    delta = 2 * m - 4
    if reading == "literal":
        tail_lo = delta - r + m
    elif reading == "consistent":
        tail_lo = delta - r + m - 2
    else:
        raise EngineError(f"unknown reading {reading!r}")
    d_r = _geometric(delta - m + 2, delta) + _geometric(tail_lo, delta - 2)
    removed = _geometric(0, m - 2) + _geometric(2, r - m + 2)
    return d_r, removed


@dataclass(frozen=True)
class ClosedForm:
    m: int
    r: int
    q: int
    d_r: int
    d_k_minus_r: int


def closed_form_dr(
    m: int, r: int, q: int, reading: str = "consistent", verify: bool = True
) -> ClosedForm:
    """``d_r`` and ``d_{k-r}`` from the closed forms, checked against the exact engine.

    Raises :class:`ClosedFormMismatch` on any disagreement when ``verify`` is set.
    """
    _check_q(q)
    up, down = closed_form_terms(m, r, reading)
    k = _dimension(m)
    n = evaluate(n_points(m), q)
    d_r = sum(q**e for e in up)
    d_dual = n - sum(q**e for e in down)
    if verify:
        exact = hierarchy(m, q, Method.EXACT)
        if exact.d(r) != d_r:
            raise ClosedFormMismatch(m, r, q, "d_r", d_r, exact.d(r))
        if exact.d(k - r) != d_dual:
            raise ClosedFormMismatch(m, r, q, "d_{k-r}", d_dual, exact.d(k - r))
    return ClosedForm(m, r, q, d_r, d_dual)


__all__ = [
    "ClosedForm",
    "ClosedFormMismatch",
    "C_of_d",
    "C_of_d_scan",
    "EngineError",
    "LRChoice",
    "Method",
    "ThresholdTable",
    "WeightHierarchy",
    "Winner",
    "admissibility_map",
    "admissible_by_lemma",
    "best_by_area",
    "closed_form_dr",
    "closed_form_terms",
    "hierarchy",
    "is_admissible",
    "lr_choice",
    "max_gamma",
    "max_krull_d",
    "method_differences",
    "s_L",
    "s_L_corners",
    "s_R",
    "s_R_corners",
    "thresholds",
]
