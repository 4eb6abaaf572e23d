"""Brute-force checks over actual prime fields.

Builds the Plücker points of G(2, m) over F_q, the generator matrix of the
code C(2, m), and computes higher weights the slow way: ``d_r`` is the
smallest support of an ``r``-dimensional subcode.  Everything here is
independent of the combinatorial engine and is meant for small cases only.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, product
from operator import or_

import numpy as np

from .grid import ColumnProfile, CornerSet, GridCoord, check_m, grid_from_corners

PRIMES = (2, 3, 5, 7)
MAX_ORACLE_M = 7
MAX_POINTS = 2_000_000
MAX_CODEWORD_TABLE = 1 << 20
DEFAULT_BUDGET = 10**7


class OracleError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when the next subcode dimension would exceed the work budget."""

    def __init__(self, r: int, count: int, budget: int, partial: tuple[int, ...]):
        super().__init__(
            f"{count} subspaces of dimension {r} exceed the budget of {budget}"
        )
        self.r = r
        self.count = count
        self.budget = budget
        self.partial = partial


def _check_field(q: int) -> None:
    if q not in PRIMES:
        raise OracleError(f"q must be one of the primes {PRIMES}, got {q}")


def plucker_index(m: int) -> list[tuple[int, int]]:
    """Coordinates of ``I(2, m)`` in colexicographic order: (1,2), (1,3), (2,3), (1,4), ..."""
    return [(x, y) for y in range(2, m + 1) for x in range(1, y)]


def gaussian_binomial(n: int, r: int, q: int) -> int:
    if not 0 <= r <= n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rank_mod_p(a: np.ndarray, p: int) -> int:
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[rank])) % p
        rank += 1
    return rank


@dataclass(frozen=True, eq=False)
class PluckerPointSet:
    """Rows of ``points`` are normalised Plücker vectors (last nonzero entry 1),
    columns follow :func:`plucker_index`."""

    m: int
    q: int
    index: tuple[tuple[int, int], ...]
    points: np.ndarray

    def __len__(self) -> int:
        return self.points.shape[0]

    def column(self, x: int, y: int) -> int:
        return self.index.index((x, y))


def _echelon_pairs(m: int, q: int):
    """Basis pairs ``(u, v)`` of every 2-dimensional subspace, one per subspace.

    The last nonzero entry of each row is 1, each such 1 is alone in its
    column, and the second row's 1 lies to the right of the first row's.
    """
    for b in range(2, m + 1):
        for a in range(1, b):
            free_u = a - 1
            free_v = [j for j in range(b - 1) if j != a - 1]
            us = np.array(list(product(range(q), repeat=free_u)), dtype=np.int64).reshape(q**free_u, free_u)
            vs = np.array(list(product(range(q), repeat=len(free_v))), dtype=np.int64).reshape(
                q ** len(free_v), len(free_v)
            )
            nu, nv = us.shape[0], vs.shape[0]
            U = np.zeros((nu * nv, m), dtype=np.int64)
            V = np.zeros((nu * nv, m), dtype=np.int64)
            U[:, :free_u] = np.repeat(us, nv, axis=0)
            U[:, a - 1] = 1
            V[:, free_v] = np.tile(vs, (nu, 1))
            V[:, b - 1] = 1
            yield U, V


def grassmann_points(m: int, q: int) -> PluckerPointSet:
    check_m(m)
    _check_field(q)
    if m > MAX_ORACLE_M:
        raise OracleError(f"m={m} exceeds the oracle cap {MAX_ORACLE_M}")
    expected = (q**m - 1) * (q ** (m - 1) - 1) // ((q**2 - 1) * (q - 1))
    if expected > MAX_POINTS:
        raise OracleError(f"G(2,{m}) over F_{q} has {expected} points, above the cap {MAX_POINTS}")
    index = plucker_index(m)
    ii = np.array([x - 1 for x, _ in index])
    jj = np.array([y - 1 for _, y in index])
    blocks = []
    for U, V in _echelon_pairs(m, q):
        blocks.append((U[:, ii] * V[:, jj] - U[:, jj] * V[:, ii]) % q)
    pts = np.concatenate(blocks) if blocks else np.zeros((0, len(index)), dtype=np.int64)
    pts = _normalise(pts, q)
    if pts.shape[0] != expected:
        raise OracleError(f"enumerated {pts.shape[0]} points, expected {expected}")
    return PluckerPointSet(m, q, tuple(index), pts)


def _normalise(pts: np.ndarray, q: int) -> np.ndarray:
    k = pts.shape[1]
    nz = pts != 0
    if not nz.any(axis=1).all():
        raise OracleError("zero Plücker vector: basis rows were dependent")
    last = k - 1 - np.argmax(nz[:, ::-1], axis=1)
    inv = np.array([0] + [pow(a, -1, q) for a in range(1, q)], dtype=np.int64)
    scale = inv[pts[np.arange(pts.shape[0]), last]]
    return (pts * scale[:, None]) % q


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    m: int
    q: int
    matrix: np.ndarray  # k x n

    @property
    def k(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]


def generator_matrix(pts: PluckerPointSet) -> GeneratorMatrix:
    g = np.ascontiguousarray(pts.points.T)
    k = g.shape[0]
    if rank_mod_p(g, pts.q) != k:
        raise OracleError("generator matrix is rank deficient")
    return GeneratorMatrix(pts.m, pts.q, g)


def _as_corner_set(m: int, corners) -> CornerSet:
    if isinstance(corners, CornerSet):
        return corners
    if isinstance(corners, ColumnProfile):
        return corners.corners()
    return CornerSet.from_points(m, corners)


def _union_mask(pts: PluckerPointSet, corners) -> np.ndarray:
    """Points lying on at least one ``S_α`` of the union."""
    cs = _as_corner_set(pts.m, corners)
    mask = np.zeros(len(pts), dtype=bool)
    for alpha in cs.corners:
        outside = [c for c, (x, y) in enumerate(pts.index) if not (x <= alpha.x and y <= alpha.y)]
        mask |= ~pts.points[:, outside].any(axis=1)
    return mask


def schubert_union_points(pts: PluckerPointSet, corners) -> int:
    """Number of F_q-points on the Schubert union with the given corners."""
    return int(_union_mask(pts, corners).sum())


def span_points(pts: PluckerPointSet, corners) -> int:
    """Points of G(2, m) inside the coordinate subspace spanned by ``I_U``."""
    profile = grid_from_corners(_as_corner_set(pts.m, corners))
    outside = [c for c, p in enumerate(pts.index) if p not in profile]
    if not outside:
        return len(pts)
    return int((~pts.points[:, outside].any(axis=1)).sum())


def span_dimension(pts: PluckerPointSet, corners) -> int:
    """Rank over F_q of the Plücker vectors of the union's points."""
    sel = pts.points[_union_mask(pts, corners)]
    if sel.shape[0] == 0:
        return 0
    return rank_mod_p(sel, pts.q)


def random_corner_sets(m: int, count: int, seed: int = 0, max_corners: int = 3) -> list[CornerSet]:
    """Deterministic pseudo-random corner sets (nonempty, antichains)."""
    rng = random.Random(seed)
    grid = [GridCoord(x, y) for x in range(1, m) for y in range(x + 1, m + 1)]
    out = []
    for _ in range(count):
        picks = rng.sample(grid, rng.randint(1, min(max_corners, len(grid))))
        out.append(CornerSet.from_points(m, picks))
    return out


# -- higher weights by subcode enumeration -----------------------------------


def _codeword_masks(g: GeneratorMatrix) -> list[int]:
    """Support bitmask of ``v @ G`` for every message ``v``, indexed base ``q``."""
    q, k = g.q, g.k
    if q**k > MAX_CODEWORD_TABLE:
        raise OracleError(f"{q}^{k} messages exceed the codeword table cap")
    digits = np.array(list(product(range(q), repeat=k)), dtype=np.int64)[:, ::-1]
    words = (digits @ g.matrix) % q
    packed = np.packbits(words != 0, axis=1)
    return [int.from_bytes(row.tobytes(), "big") for row in packed]


def _row_choices(k: int, q: int, pivots: tuple[int, ...]) -> list[list[int]]:
    """Message indices each echelon row can take for the given pivot columns."""
    pset = set(pivots)
    choices = []
    for p in pivots:
        free = [j for j in range(p + 1, k) if j not in pset]
        base = q**p
        row = []
        for vals in product(range(q), repeat=len(free)):
            row.append(base + sum(v * q**j for v, j in zip(vals, free)))
        choices.append(row)
    return choices


def _min_support_for_pivots(args) -> int:
    masks, k, q, pivots = args
    best = None
    rows = [[masks[i] for i in row] for row in _row_choices(k, q, pivots)]
    for combo in product(*rows):
        w = reduce(or_, combo).bit_count()
        if best is None or w < best:
            best = w
    return best


def brute_hierarchy(
    g: GeneratorMatrix,
    r_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> tuple[int, ...]:
    """``(d_1, ..., d_r_max)`` as minimum supports of ``r``-dimensional subcodes.

    Subspaces are enumerated once each through reduced echelon bases.  Raises
    :class:`BudgetExceeded` before starting a dimension whose subspace count is
    above ``budget``.
    """
    k, q = g.k, g.q
    r_max = k if r_max is None else r_max
    if not 1 <= r_max <= k:
        raise OracleError(f"r_max must lie in 1..{k}, got {r_max}")
    if budget <= 0:
        raise OracleError("budget must be positive")
    masks = _codeword_masks(g)
    out: list[int] = []
    for r in range(1, r_max + 1):
        count = gaussian_binomial(k, r, q)
        if count > budget:
            raise BudgetExceeded(r, count, budget, tuple(out))
        tasks = [(masks, k, q, piv) for piv in combinations(range(k), r)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_min_support_for_pivots, tasks))
        else:
            results = [_min_support_for_pivots(t) for t in tasks]
        out.append(min(results))
    return tuple(out)


def codeword_weight_distribution(g: GeneratorMatrix) -> dict[int, int]:
    dist: dict[int, int] = {}
    for mask in _codeword_masks(g):
        w = mask.bit_count()
        dist[w] = dist.get(w, 0) + 1
    return dict(sorted(dist.items()))


def oracle_hierarchy(m: int, q: int, r_max: int | None = None, budget: int = DEFAULT_BUDGET, jobs: int = 1):
    return brute_hierarchy(generator_matrix(grassmann_points(m, q)), r_max, budget, jobs)
