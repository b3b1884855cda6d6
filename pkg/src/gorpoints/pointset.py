"""Finite point sets in projective space and their Hilbert functions.

The Hilbert function of the coordinate ring of ``X`` in degree ``j`` is the
dimension of the span of ``L_1^j, ..., L_r^j`` where ``L_i`` is the dual
linear form of the i-th point, so everything here is a matrix rank.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exactalg import Poly, QMatrix, Ring, as_fraction, monomials, power_of_linear, rank

log = logging.getLogger(__name__)


class InvalidPointError(ValueError):
    pass


class DuplicatePointError(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide projectively")
        self.pair = (i, j)


class RegularFormError(ValueError):
    """A linear form vanishes at one of the points."""


def _normalized(coords: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    lead = next(c for c in coords if c)
    return tuple(c / lead for c in coords)


@dataclass(frozen=True, eq=False)
class Point:
    """A projective point; equality is proportionality of coordinate vectors."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(as_fraction(c) for c in self.coords)
        if len(coords) < 2:
            raise InvalidPointError("a projective point needs at least two coordinates")
        if not any(coords):
            raise InvalidPointError("the zero vector is not a projective point")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def normalized(self) -> tuple[Fraction, ...]:
        return _normalized(self.coords)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class DualLinearForm:
    form: Poly

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.form.coefficient_vector(monomials(self.form.nvars, 1))

    def power(self, t: int) -> Poly:
        return power_of_linear(self.coeffs, t)


def dual_form(P: Point | Sequence) -> DualLinearForm:
    """``L = sum_i P_i * y_i``, coefficients exactly the coordinates of ``P``."""
    if not isinstance(P, Point):
        P = Point(tuple(P))
    return DualLinearForm(Poly.linear(P.coords, Ring.DUAL))


class PointSet:
    """An ordered list of ``r >= 1`` pairwise distinct points of ``P^n``."""

    __slots__ = ("points",)

    def __init__(self, points: Sequence[Point | Sequence]):
        pts = tuple(p if isinstance(p, Point) else Point(tuple(p)) for p in points)
        if not pts:
            raise InvalidPointError("a point set needs at least one point")
        lengths = {len(p) for p in pts}
        if len(lengths) != 1:
            raise InvalidPointError(f"points have mixed coordinate counts {sorted(lengths)}")
        seen: dict[tuple, int] = {}
        for i, p in enumerate(pts):
            key = p.normalized()
            if key in seen:
                raise DuplicatePointError(seen[key], i)
            seen[key] = i
        self.points = pts

    @property
    def r(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return self.points[0].n

    def __len__(self):
        return self.r

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet(r={self.r}, n={self.n}, {list(self.points)!r})"

    def coordinates(self) -> list[tuple[Fraction, ...]]:
        return [p.coords for p in self.points]

    def without(self, i: int) -> "PointSet":
        return PointSet(self.points[:i] + self.points[i + 1:])

    def dual_forms(self) -> list[DualLinearForm]:
        return [dual_form(p) for p in self.points]


def power_matrix(X: PointSet, j: int) -> QMatrix:
    """Rows are the coefficient vectors of ``L_i^j`` over the degree-j monomials."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    basis = monomials(X.n + 1, j)
    return QMatrix([power_of_linear(p.coords, j).coefficient_vector(basis) for p in X],
                   ncols=len(basis))


def hilbert_function(X: PointSet, j: int) -> int:
    return rank(power_matrix(X, j))


@dataclass(frozen=True)
class HilbertData:
    hf: tuple[int, ...]
    h_vector: tuple[int, ...]
    socle_degree: int
    r: int = field(default=0)

    def value(self, j: int) -> int:
        """HF(j) for any ``j >= 0``; constant ``r`` from the socle degree on."""
        if j < 0:
            return 0
        return self.hf[j] if j < len(self.hf) else self.hf[-1]


def hilbert_data(X: PointSet) -> HilbertData:
    r = X.r
    hf = []
    j = 0
    while True:
        v = hilbert_function(X, j)
        hf.append(v)
        if v == r:
            break
        j += 1
        # distinct points impose independent conditions by degree r - 1
        assert j <= r, "Hilbert function failed to reach r; points are not distinct"
    h = tuple(b - a for a, b in zip([0] + hf[:-1], hf))
    return HilbertData(hf=tuple(hf), h_vector=h, socle_degree=len(hf) - 1, r=r)


def evaluate_form(z: Sequence, P: Point | Sequence) -> Fraction:
    coords = P.coords if isinstance(P, Point) else tuple(as_fraction(c) for c in P)
    if len(z) != len(coords):
        raise ValueError(f"linear form has {len(z)} coefficients, point has {len(coords)}")
    return sum((as_fraction(b) * a for b, a in zip(z, coords)), Fraction(0))


def is_regular(X: PointSet, z: Sequence) -> bool:
    return all(evaluate_form(z, p) != 0 for p in X)


def _candidates(n: int, r: int):
    for i in range(n, -1, -1):
        yield tuple(1 if k == i else 0 for k in range(n + 1))
    yield from product(range(1, r + 2), repeat=n + 1)


def choose_regular_form(X: PointSet, hint: Sequence | None = None) -> tuple[Fraction, ...]:
    """Pick a linear form ``z`` with ``z(P) != 0`` for every point.

    Order tried: the hint, then ``x_n, x_{n-1}, ..., x_0``, then every vector in
    ``{1, ..., r+1}^(n+1)`` in lexicographic order.  The last family cannot be
    exhausted: each point kills at most ``(r+1)^n`` of its ``(r+1)^(n+1)`` members.
    """
    if hint is not None:
        hint = tuple(as_fraction(c) for c in hint)
        if is_regular(X, hint):
            return hint
        log.info("regular-form hint %s vanishes at a point; searching", hint)
    for z in _candidates(X.n, X.r):
        if is_regular(X, z):
            return tuple(Fraction(c) for c in z)
    raise AssertionError("no regular linear form found")  # pragma: no cover


@dataclass
class ValidationReport:
    r: int
    n: int
    nondegenerate: bool
    warnings: list[str] = field(default_factory=list)


def validate(X: PointSet | Sequence[Sequence]) -> ValidationReport:
    """Check distinctness (raises) and flag points lying in a hyperplane (warns)."""
    if not isinstance(X, PointSet):
        X = PointSet(X)
    span = hilbert_function(X, 1)
    report = ValidationReport(r=X.r, n=X.n, nondegenerate=span == X.n + 1)
    if not report.nondegenerate:
        report.warnings.append(
            f"degenerate configuration: points span a P^{span - 1} inside P^{X.n}")
    return report


def drop_one_subsets(X: PointSet):
    return (X.without(i) for i in range(X.r))

