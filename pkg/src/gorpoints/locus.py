"""Gorenstein completions of partial point configurations.

For ``r`` points with socle degree ``s`` the powers ``L_1^(s-1), ..., L_r^(s-1)``
must be linearly dependent, i.e. every ``r x r`` minor of the matrix with
columns ``L_i^(s-1)`` vanishes.  Some points are fixed, the rest carry
symbolic coordinates; the minors are then polynomial equations in those
coordinates.  Membership of a concrete completion is certified pointwise
by the full decision procedure.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import repeat
from math import comb
from typing import Sequence

from .exactalg import Poly, Ring, monomials, poly_matrix_minors
from .gorenstein import GorensteinCertificate, dgo_test, is_arithmetically_gorenstein
from .pointset import DuplicatePointError, InvalidPointError, PointSet, hilbert_data

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocusProblem:
    """``fixed`` points plus ``k`` unknown points, aiming at socle degree ``target_s``."""

    fixed: PointSet
    k: int
    target_s: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("at least one unknown point is required")
        if self.target_s < 2:
            raise ValueError("target socle degree must be at least 2")

    @property
    def n(self) -> int:
        return self.fixed.n

    @property
    def target_r(self) -> int:
        return self.fixed.r + self.k

    @property
    def nvars(self) -> int:
        return self.k * (self.n + 1)

    def blocks(self) -> list[list[int]]:
        """Variable indices of each unknown point's coordinates."""
        m = self.n + 1
        return [list(range(u * m, (u + 1) * m)) for u in range(self.k)]

    def variable_names(self) -> list[str]:
        return [f"p{u + 1}_{c}" for u in range(self.k) for c in range(self.n + 1)]

    def complete(self, unknown_points: Sequence[Sequence]) -> PointSet:
        if len(unknown_points) != self.k:
            raise ValueError(f"expected {self.k} points, got {len(unknown_points)}")
        return PointSet(list(self.fixed.points) + [tuple(p) for p in unknown_points])


def _monomial_value(coords, exp) -> Fraction:
    v = Fraction(1)
    for c, e in zip(coords, exp):
        if e:
            v *= c ** e
    return v


def power_matrix_symbolic(problem: LocusProblem) -> list[list[Poly]]:
    """The ``C(s-1+n, n) x r`` matrix with one column per point.

    Row ``b`` of column ``i`` is the monomial ``P_i^b``; this differs from the
    coefficient vector of ``L_i^(s-1)`` by a fixed multinomial factor per row,
    which changes no rank and scales each minor by a nonzero constant.
    """
    nv = problem.nvars
    basis = monomials(problem.n + 1, problem.target_s - 1)
    cols = []
    for p in problem.fixed:
        cols.append([Poly.constant(_monomial_value(p.coords, b), nv, Ring.OPERATOR) for b in basis])
    for block in problem.blocks():
        col = []
        for b in basis:
            exp = [0] * nv
            for idx, e in zip(block, b):
                exp[idx] = e
            col.append(Poly({tuple(exp): 1}, nvars=nv, ring=Ring.OPERATOR))
        cols.append(col)
    return [list(row) for row in zip(*cols)]


@dataclass
class LocusEquations:
    equations: list[Poly]
    total_minors: int
    zero_minors: int
    variable_names: list[str]
    blocks: list[list[int]]
    note: str | None = None

    def evaluate(self, unknown_points: Sequence[Sequence]) -> list[Fraction]:
        values = [c for p in unknown_points for c in p]
        return [eq.evaluate(values) for eq in self.equations]


def minor_equations(problem: LocusProblem) -> LocusEquations:
    """All maximal minors of the symbolic power matrix, deduplicated up to scalar."""
    nrows = comb(problem.target_s - 1 + problem.n, problem.n)
    r = problem.target_r
    names, blocks = problem.variable_names(), problem.blocks()
    if nrows < r:
        return LocusEquations([], 0, 0, names, blocks,
                              note=f"only {nrows} rows for {r} columns: rank < r holds automatically")
    minors, total = poly_matrix_minors(power_matrix_symbolic(problem), r)
    seen: dict[Poly, None] = {}
    for m in minors:
        seen.setdefault(m.monic(), None)
    return LocusEquations(list(seen), total, total - len(minors), names, blocks)


@dataclass
class CompletionResult:
    found: list[tuple[PointSet, GorensteinCertificate]]
    trials: int
    seed: int
    rejections: Counter = field(default_factory=Counter)


def sample_point(rng: random.Random, n: int, coordinate_range: int) -> tuple[Fraction, ...]:
    """Rational coordinates with numerator in ``[-B, B]`` and denominator in ``[1, B]``."""
    B = coordinate_range
    return tuple(Fraction(rng.randint(-B, B), rng.randint(1, B)) for _ in range(n + 1))


def _trial(problem: LocusProblem, unknowns, z_hint):
    try:
        X = problem.complete(unknowns)
    except (DuplicatePointError, InvalidPointError):
        return None, "invalid_point"
    hd = hilbert_data(X)
    if hd.socle_degree != problem.target_s:
        return None, "socle_degree"
    cert = is_arithmetically_gorenstein(X, z_hint)
    if not cert.is_gorenstein:
        return None, cert.failure_reason.code
    return (X, cert), None


def complete_to_gorenstein(problem: LocusProblem, trials: int, seed: int, coordinate_range: int,
                           z_hint: Sequence | None = None, workers: int = 1) -> CompletionResult:
    """Seeded random search for unknown points making the whole set Gorenstein.

    Every trial draws all ``k`` unknown points, then requires the socle degree
    to equal ``target_s`` and the decision procedure to answer Gorenstein.
    Candidates are drawn up front, so ``workers > 1`` (process pool) returns
    the same result in the same order.

    Points come from a coordinate box, not from the rank-drop locus itself,
    so a locus of high codimension is almost never hit.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if coordinate_range < 1:
        raise ValueError("coordinate_range must be positive")
    rng = random.Random(seed)
    candidates = [[sample_point(rng, problem.n, coordinate_range) for _ in range(problem.k)]
                  for _ in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_trial, repeat(problem), candidates, repeat(z_hint)))
    else:
        outcomes = [_trial(problem, c, z_hint) for c in candidates]
    result = CompletionResult([], trials, seed)
    for hit, why in outcomes:
        if hit is None:
            result.rejections[why] += 1
        else:
            result.found.append(hit)
    log.info("completion search: %d/%d accepted", len(result.found), trials)
    return result


def recheck(X: PointSet, problem: LocusProblem | None = None) -> bool:
    """Re-verify a completion with both deciders (and the minors, given the problem)."""
    ok = is_arithmetically_gorenstein(X).is_gorenstein and dgo_test(X).verdict
    if ok and problem is not None:
        eqs = minor_equations(problem)
        unknowns = [p.coords for p in X.points[problem.fixed.r:]]
        ok = not any(eqs.evaluate(unknowns))
    return ok
