import json
from itertools import combinations
from pathlib import Path

import pytest

from grassmann_weights.engine import (
    C_of_d,
    C_of_d_scan,
    ClosedFormMismatch,
    EngineError,
    Method,
    Winner,
    admissibility_map,
    admissible_by_lemma,
    best_by_area,
    closed_form_dr,
    closed_form_terms,
    hierarchy,
    is_admissible,
    lr_choice,
    max_gamma,
    max_krull_d,
    method_differences,
    s_L,
    s_L_corners,
    s_R,
    s_R_corners,
    thresholds,
)
from grassmann_weights.grid import ColumnProfile, grid_from_corners, grid_points, iter_profiles
from grassmann_weights.qpoly import QPoly, evaluate, g_profile, lex_key, n_points

DATA = Path(__file__).parent / "data"


def brute_best(m, r, q):
    """Independent maximiser: every distinct-part subset of {1..m-1} with sum r."""
    best, wit = -1, []
    for t in range(m):
        for parts in combinations(range(m - 1, 0, -1), t):
            if sum(parts) != r:
                continue
            v = sum(q ** (2 * i + j - 3) for i, length in enumerate(parts, 1) for j in range(1, length + 1))
            if v > best:
                best, wit = v, [parts]
            elif v == best:
                wit.append(parts)
    return best, sorted(wit, reverse=True)


def test_thresholds():
    t = thresholds(7)
    assert t.nu[0] == t.mu[0] == 0
    assert t.nu[-1] == t.mu[-1] == 21
    assert all(a < b for a, b in zip(t.nu, t.nu[1:]))
    assert all(a < b for a, b in zip(t.mu, t.mu[1:]))


def test_max_gamma_examples():
    assert max_gamma(4, 5, 2) == (19, (ColumnProfile(4, (3, 2)),))
    v, wit = max_gamma(4, 6, 3)
    assert v == evaluate(n_points(4), 3)
    assert wit == (ColumnProfile.full(4),)
    assert max_gamma(5, 4, 2) == (15, (ColumnProfile(5, (4,)),))
    assert evaluate(g_profile(ColumnProfile(5, (3, 1))), 2) == 11


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("q", [2, 3, 5])
def test_max_gamma_matches_brute(m, q):
    for r in range(m * (m - 1) // 2 + 1):
        v, wit = max_gamma(m, r, q)
        bv, bwit = brute_best(m, r, q)
        assert v == bv
        assert [p.heights for p in wit] == bwit


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("q", [2, 3, 101])
def test_dynamic_programme_matches_enumeration(m, q):
    table = best_by_area(m, q)
    for r, (v, wit) in enumerate(table):
        assert (v, wit) == max_gamma(m, r, q)


def test_hierarchy_examples():
    assert hierarchy(4, 2).weights == (16, 24, 28, 32, 34, 35)
    h = hierarchy(5, 2)
    assert h.d(1) == 64 and h.d(2) == 96
    for m in range(2, 9):
        for meth in Method:
            h = hierarchy(m, 3, meth)
            assert h.d(h.k) == h.n


@pytest.mark.parametrize("m", range(3, 13))
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_hierarchy_shape(m, q):
    h = hierarchy(m, q)
    assert h.k == m * (m - 1) // 2
    assert h.n == evaluate(n_points(m), q)
    assert h.is_strictly_increasing()
    assert h.d(1) == q ** (2 * m - 4)
    assert all(d == h.n - J for d, J in zip(h.weights, h.maxima))


def test_hierarchy_rejects_bad_arguments():
    with pytest.raises(EngineError):
        hierarchy(31, 2)
    with pytest.raises(EngineError):
        hierarchy(5, 1)
    with pytest.raises(ValueError):
        hierarchy(5, 2, "fast")


def test_hierarchy_is_deterministic():
    a, b = hierarchy(9, 2), hierarchy(9, 2)
    assert a == b
    assert a.witnesses == b.witnesses


def test_large_m_runs():
    h = hierarchy(30, 101)
    assert h.d(1) == 101**56
    assert h.is_strictly_increasing()


def test_s_L_examples():
    assert s_L(5, 5) == ColumnProfile(5, (4, 1))
    assert s_L(5, 5).corners().as_tuples() == [(1, 5), (2, 3)]
    assert s_L(5, 4) == ColumnProfile(5, (4,))
    assert s_L(5, 0) == ColumnProfile.empty(5)
    for m in range(2, 10):
        assert s_L(m, m * (m - 1) // 2) == ColumnProfile.full(m)


def test_s_R_examples():
    assert s_R(5, 5) == ColumnProfile(5, (3, 2))
    assert s_R(5, 5).corners().as_tuples() == [(2, 4)]
    assert s_R(5, 1) == ColumnProfile(5, (1,))
    assert s_R(5, 1).corners().as_tuples() == [(1, 2)]
    assert s_R(5, 6) == ColumnProfile(5, (3, 2, 1))
    assert s_R(5, 6).corners().as_tuples() == [(3, 4)]
    with pytest.raises(EngineError):
        s_R(5, 11)


@pytest.mark.parametrize("m", range(2, 16))
def test_extremal_unions_match_corner_formulas(m):
    for K in range(m * (m - 1) // 2 + 1):
        left, right = s_L(m, K), s_R(m, K)
        assert left.area == right.area == K
        assert grid_from_corners(s_L_corners(m, K)) == left
        assert grid_from_corners(s_R_corners(m, K)) == right


def test_lr_choice_examples():
    c = lr_choice(5, 4)
    assert c.winner is Winner.LEFT
    assert c.gL == QPoly([1, 1, 1, 1]) and c.gR == QPoly([1, 1, 2])
    c = lr_choice(5, 5)
    assert c.winner is Winner.TIE
    assert c.gL == c.gR == QPoly([1, 1, 2, 1])
    for m in range(2, 9):
        assert lr_choice(m, m * (m - 1) // 2).winner is Winner.TIE


@pytest.mark.parametrize("m", range(2, 10))
def test_extremal_union_is_lex_maximal(m):
    best = {}
    for p in iter_profiles(m):
        g = g_profile(p)
        if p.area not in best or lex_key(g) > lex_key(best[p.area]):
            best[p.area] = g
    for K, g in best.items():
        assert lr_choice(m, K).best == g


@pytest.mark.parametrize("m", range(2, 10))
def test_large_q_method_agreement(m):
    assert hierarchy(m, 101).weights == hierarchy(m, 101, Method.LR).weights


def test_method_differences_small_q():
    # exploratory: no disagreement turns up at these sizes
    for m in range(2, 9):
        assert method_differences(m, 2) == []


def test_C_of_d():
    assert C_of_d(11, 11) == 27
    assert C_of_d(15, 4) == 5
    for m in range(2, 12):
        assert C_of_d(m, 0) == 1
    with pytest.raises(EngineError):
        C_of_d(5, 7)


@pytest.mark.parametrize("m", range(2, 21))
def test_C_of_d_endpoint_law(m):
    for d in range(2 * m - 3):
        assert C_of_d(m, d) == C_of_d_scan(m, d)


def test_max_krull_d():
    assert max_krull_d(11, 26) == 10
    for m in range(2, 12):
        assert max_krull_d(m, 1) == 0
    assert max_krull_d(4, 6) == 4
    with pytest.raises(EngineError):
        max_krull_d(4, 0)


@pytest.mark.parametrize("m", range(2, 13))
def test_max_krull_d_is_top_degree(m):
    # the largest degree over all profiles of area K
    top = {}
    for p in iter_profiles(m):
        top[p.area] = max(top.get(p.area, -1), g_profile(p).degree)
    for K in range(1, m * (m - 1) // 2 + 1):
        assert max_krull_d(m, K) == top[K]


def test_is_admissible_examples():
    assert is_admissible(11, (4, 9))
    assert not is_admissible(9, (2, 6))
    for m in range(6, 16):
        for d in range(3, m - 2):
            assert is_admissible(m, (1, d + 2))


def test_admissibility_reproduces_crossed_out_grid():
    crossed = {tuple(p) for p in json.loads((DATA / "crossed_points_m15.json").read_text())["non_admissible"]}
    m = 15
    got = {(r["x"], r["y"]) for r in admissibility_map(m) if not r["admissible"]}
    assert got == crossed
    assert (7, 10) in got


def test_admissible_by_lemma_examples():
    assert admissible_by_lemma(11, (4, 9))
    assert admissible_by_lemma(15, (2, 14)) == is_admissible(15, (2, 14))
    # genuinely interior points are excluded by the closed form
    assert not admissible_by_lemma(15, (5, 11))
    assert not admissible_by_lemma(15, (4, 12))


def test_lemma_only_gives_necessary_conditions_on_even_diagonals():
    # (7,10) sits second from the right on D_14, a position the closed form
    # leaves open; the direct cost comparison rules it out
    assert admissible_by_lemma(15, (7, 10))
    assert not is_admissible(15, (7, 10))


@pytest.mark.parametrize("m", range(11, 21))
def test_lemma_soundness(m):
    for p in grid_points(m):
        if not admissible_by_lemma(m, p):
            assert not is_admissible(m, p), (m, p)
        if p.dimension <= m - 3:
            assert admissible_by_lemma(m, p) == is_admissible(m, p)


def test_small_m_uses_direct_predicate():
    for m in range(2, 11):
        for p in grid_points(m):
            assert admissible_by_lemma(m, p) == is_admissible(m, p)


@pytest.mark.parametrize("m", range(2, 21))
def test_optimal_unions_use_admissible_top_points(m):
    for area, (_, witnesses) in enumerate(best_by_area(m, 101)):
        if area == 0:
            continue
        for p in witnesses:
            top = max(pt.dimension for pt in p.points())
            for pt in p.points():
                if pt.dimension == top:
                    assert is_admissible(m, pt), (m, p, pt)


def test_closed_form_examples():
    assert closed_form_dr(6, 7, 2).d_r == hierarchy(6, 2).d(7)
    assert closed_form_dr(7, 9, 3).d_r == hierarchy(7, 3).d(9)
    assert closed_form_dr(6, 7, 2).d_k_minus_r == hierarchy(6, 2).d(15 - 7)


def test_closed_form_range():
    with pytest.raises(EngineError):
        closed_form_dr(6, 6, 2)
    with pytest.raises(EngineError):
        closed_form_dr(6, 8, 2)
    with pytest.raises(EngineError):
        closed_form_dr(4, 5, 2)


def test_closed_form_term_counts():
    for m in (6, 7, 8, 9):
        for r in range(m + 1, 2 * m - 4):
            up, removed = closed_form_terms(m, r)
            assert len(up) == r
            # n minus r monomials leaves a code of the complementary area
            assert len(removed) == r
            lit, _ = closed_form_terms(m, r, "literal")
            assert len(lit) == r - 2


def test_literal_reading_is_flagged():
    with pytest.raises(ClosedFormMismatch) as info:
        closed_form_dr(6, 7, 2, reading="literal")
    assert info.value.which == "d_r"
    # the printed bounds land on d_{r-2}
    for m in (6, 7, 8):
        for r in range(m + 1, 2 * m - 4):
            lit = closed_form_dr(m, r, 2, reading="literal", verify=False)
            assert lit.d_r == hierarchy(m, 2).d(r - 2)
