"""Exact polynomials in ``q`` with nonnegative integer coefficients.

These carry point counts of Schubert unions: every grid point contributes a
single monomial, so the coefficients stay nonnegative.  Signed arithmetic is
only needed for the word-length identity and lives in private helpers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .grid import ColumnProfile, check_m


class QPolyError(ValueError):
    pass


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Dense coefficient tuple, index = exponent, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(a) for a in coeffs)
        if any(a < 0 for a in c):
            raise QPolyError(f"coefficients must be nonnegative: {c}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, e: int, coeff: int = 1) -> QPoly:
        return cls([0] * e + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPoly:
        """Sum of ``q**e`` over the given exponents (with multiplicity)."""
        out: list[int] = []
        for e in exponents:
            if e >= len(out):
                out.extend([0] * (e + 1 - len(out)))
            out[e] += 1
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q: int) -> int:
        return evaluate(self, q)

    def __add__(self, other: QPoly) -> QPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    def __mul__(self, other: QPoly) -> QPoly:
        return QPoly(_mul(self.coeffs, other.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: QPoly) -> bool:
        return lex_cmp(self, other) < 0

    def __le__(self, other: QPoly) -> bool:
        return lex_cmp(self, other) <= 0

    def __gt__(self, other: QPoly) -> bool:
        return lex_cmp(self, other) > 0

    def __ge__(self, other: QPoly) -> bool:
        return lex_cmp(self, other) >= 0

    def at_one(self) -> int:
        return sum(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                terms.append(str(a))
            else:
                terms.append(mono if a == 1 else f"{a}{mono}")
        return " + ".join(terms)


def lex_key(p: QPoly) -> tuple:
    """Sort key realising the degree-then-top-coefficient order."""
    return (len(p.coeffs), p.coeffs[::-1])


def lex_cmp(a: QPoly, b: QPoly) -> int:
    """-1, 0 or 1 as ``a`` is lexicographically smaller, equal or larger."""
    ka, kb = lex_key(a), lex_key(b)
    return (ka > kb) - (ka < kb)


def evaluate(p: QPoly, q: int) -> int:
    if q < 2:
        raise QPolyError(f"q must be at least 2, got {q}")
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * q + a
    return acc


def g_profile(profile: ColumnProfile) -> QPoly:
    """Point count of the Schubert union with this grid: ``Σ q^(x+y-3)``.

    Column ``x`` with height ``c`` contributes exponents ``2x-2 .. 2x+c-3``.
    """
    exps = (e for x, c in enumerate(profile.heights, start=1) for e in range(2 * x - 2, 2 * x + c - 2))
    return QPoly.from_exponents(exps)


def g_union_general(l: int, m: int, corners: Iterable[Sequence[int]]) -> QPoly:
    """Point count of a Schubert union in ``G(l, m)`` by enumerating ``I_U``."""
    if not 1 <= l <= m:
        raise QPolyError(f"need 1 <= l <= m, got l={l}, m={m}")
    alphas = []
    for a in corners:
        a = tuple(int(v) for v in a)
        if len(a) != l or not all(1 <= v <= m for v in a) or any(u >= v for u, v in zip(a, a[1:])):
            raise QPolyError(f"malformed corner {a} for I({l},{m})")
        alphas.append(a)
    shift = l * (l + 1) // 2
    exps = []
    for beta in combinations(range(1, m + 1), l):
        if any(all(b <= a for b, a in zip(beta, alpha)) for alpha in alphas):
            exps.append(sum(beta) - shift)
    return QPoly.from_exponents(exps)


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Signed integer polynomial long division; ``den`` must be monic up to sign."""
    num = list(num)
    den = list(_trim(den))
    lead = den[-1]
    if abs(lead) != 1:
        raise QPolyError("divisor must have leading coefficient ±1")
    quot = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * lead
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return quot, list(_trim(num))


def _q_power_minus_one(e: int) -> list[int]:
    return [-1] + [0] * (e - 1) + [1]


def n_points(m: int) -> QPoly:
    """``(q^m - 1)(q^(m-1) - 1) / ((q^2 - 1)(q - 1))``, the number of points of G(2, m).

    Computed by exact division and cross-checked against the full-grid sum.
    """
    check_m(m)
    num = _mul(_q_power_minus_one(m), _q_power_minus_one(m - 1))
    den = _mul(_q_power_minus_one(2), _q_power_minus_one(1))
    quot, rem = _divmod(num, den)
    if rem:
        raise QPolyError(f"word-length division left remainder {rem} for m={m}")
    result = QPoly(quot)
    if result != g_profile(ColumnProfile.full(m)):
        raise QPolyError(f"word-length quotient disagrees with the full-grid count for m={m}")
    return result


def word_length_identity_holds(m: int) -> bool:
    """Check ``g(full grid) * (q^2-1)(q-1) == (q^m-1)(q^(m-1)-1)`` as signed polynomials."""
    full = g_profile(ColumnProfile.full(m)).coeffs
    lhs = _mul(_mul(full, _q_power_minus_one(2)), _q_power_minus_one(1))
    rhs = _mul(_q_power_minus_one(m), _q_power_minus_one(m - 1))
    return _trim(lhs) == _trim(rhs)


__all__ = [
    "QPoly",
    "QPolyError",
    "evaluate",
    "g_profile",
    "g_union_general",
    "lex_cmp",
    "lex_key",
    "n_points",
    "word_length_identity_holds",
]
