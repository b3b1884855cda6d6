"""Artinian reductions of point sets and counting obstructions to lifting.

A form ``F`` of degree ``s`` generates the inverse system of an Artinian
reduction of a Gorenstein set ``X`` (with respect to ``z``) iff
``F = sum alpha_i / z(P_i) L_i^s`` with ``sum alpha_i L_i^(s-1) = 0`` and every
``alpha_i`` nonzero.  The second half of the module compares Waring ranks
against the length of compressed algebras to show that generic forms in
many variables are never such reductions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exactalg import Poly, QMatrix, as_fraction, monomials, power_of_linear, solve
from .gorenstein import AlphaVector, _z_values
from .pointset import PointSet, hilbert_data


@dataclass(frozen=True)
class ReductionVerdict:
    liftable: bool
    alpha: AlphaVector | None = None
    obstruction: str | None = None   # degree_mismatch | linear_system_infeasible | forced_zero_coefficient
    forced_zero: tuple[int, ...] = ()
    solution_dimension: int | None = None
    x_is_gorenstein: bool | None = None

    @property
    def meaning(self) -> str:
        if not self.liftable:
            return "not an Artinian reduction of X"
        if self.x_is_gorenstein:
            return "the algebra is an Artinian reduction of the Gorenstein set X"
        return ("the linear conditions hold, but X is not known to be Gorenstein, "
                "so this does not certify an Artinian reduction")


def _witness(particular, homog) -> tuple[Fraction, ...]:
    # alpha(t) = p + sum_k t^(k+1) h_k; coordinate i is a nonzero polynomial in t
    # unless it is forced to vanish, so a small natural t avoids every root.
    for t in itertools.count():
        vec = list(particular)
        for k, h in enumerate(homog):
            w = Fraction(t) ** (k + 1)
            if w:
                vec = [a + w * b for a, b in zip(vec, h)]
        if all(vec):
            return tuple(vec)
    raise AssertionError("unreachable")  # pragma: no cover


def is_artinian_reduction(F: Poly, X: PointSet, z: Sequence,
                          x_is_gorenstein: bool | None = None) -> ReductionVerdict:
    """Look for nonzero ``alpha`` with ``F = sum alpha_i/z(P_i) L_i^s`` and ``sum alpha_i L_i^(s-1) = 0``.

    Both conditions are linear in ``alpha`` and solved jointly and exactly.
    The stated meaning (``F`` is dual to an Artinian reduction of ``X``) only
    holds for Gorenstein ``X``; pass ``x_is_gorenstein`` when known.
    """
    z = tuple(as_fraction(c) for c in z)
    zvals = _z_values(X, z)
    s = hilbert_data(X).socle_degree
    if not F.is_homogeneous() or F.degree != s:
        return ReductionVerdict(False, obstruction="degree_mismatch", x_is_gorenstein=x_is_gorenstein)
    nv = X.n + 1
    top = monomials(nv, s)
    low = monomials(nv, s - 1) if s >= 1 else ()
    cols = []
    for p, zv in zip(X, zvals):
        col = list(power_of_linear(p.coords, s).coefficient_vector(top))
        col = [c / zv for c in col]
        if s >= 1:
            col += list(power_of_linear(p.coords, s - 1).coefficient_vector(low))
        cols.append(col)
    A = QMatrix.from_columns(cols)
    rhs = list(F.coefficient_vector(top)) + [Fraction(0)] * len(low)
    sol = solve(A, rhs)
    if sol is None:
        return ReductionVerdict(False, obstruction="linear_system_infeasible",
                                x_is_gorenstein=x_is_gorenstein)
    particular, homog = sol
    forced = tuple(i for i in range(X.r) if particular[i] == 0 and all(h[i] == 0 for h in homog))
    if forced:
        return ReductionVerdict(False, obstruction="forced_zero_coefficient", forced_zero=forced,
                                solution_dimension=len(homog), x_is_gorenstein=x_is_gorenstein)
    alpha = AlphaVector(_witness(particular, homog), kernel_dimension=len(homog))
    return ReductionVerdict(True, alpha=alpha, solution_dimension=len(homog),
                            x_is_gorenstein=x_is_gorenstein)


_AH_EXCEPTIONS = {(3, 4): 8, (4, 2): 6, (4, 3): 10, (4, 4): 15}


def waring_G(j: int, n: int) -> int:
    """Waring rank of a generic degree-j form in ``n + 1`` variables (``j >= 3``)."""
    if j < 3:
        raise ValueError("only degrees j >= 3 are covered")
    if n < 1:
        raise ValueError("n must be at least 1")
    if (j, n) in _AH_EXCEPTIONS:
        return _AH_EXCEPTIONS[(j, n)]
    return -(-comb(n + j, j) // (n + 1))


def compressed_length(s: int, n: int) -> int:
    """Length of the apolar algebra of a generic degree-s form in ``n`` variables."""
    if s < 2 or n < 1:
        raise ValueError("need s >= 2 and n >= 1")
    j = s // 2
    if s % 2:
        return 2 * comb(n + j, j)
    return 2 * comb(n + j - 1, j - 1) + comb(n - 1 + j, j)


def nonliftable_test(s: int, n: int) -> bool:
    """True when a generic degree-s form in ``n`` variables cannot lift to Gorenstein points of ``P^n``.

    Compares the Waring lower bound ``C(s+n-1, s)/n`` with the compressed
    length, strictly and exactly.
    """
    if s < 3:
        raise ValueError("s must be at least 3")
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(comb(s + n - 1, s), n) > compressed_length(s, n)


@dataclass(frozen=True)
class WaringData:
    j: int
    n: int
    G: int
    rho: int
    nonliftable: bool


def waring_data(s: int, n: int) -> WaringData:
    return WaringData(s, n, waring_G(s, n), compressed_length(s, n), nonliftable_test(s, n))


def n0_scan_cap(s: int) -> int:
    j = s // 2
    return j * j + 4 * j + 5 + 16


def n0(s: int) -> int:
    """Least n for which the non-liftability inequality holds in degree s."""
    cap = n0_scan_cap(s)
    for n in range(1, cap + 1):
        if nonliftable_test(s, n):
            return n
    raise AssertionError(f"no n <= {cap} satisfies the inequality for s = {s}")


def n0_table(s_values: Sequence[int]) -> list[tuple[int, int]]:
    return [(s, n0(s)) for s in s_values]
