"""Dense exact linear algebra over the rationals.

Rank and determinants use fraction-free (Bareiss) elimination on integer
rows; kernels and linear solves go through a plain rational RREF.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .poly import Poly, Ring, as_fraction


class QMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows", "ncols")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        self._rows = tuple(tuple(as_fraction(v) for v in row) for row in rows)
        if self._rows:
            widths = {len(r) for r in self._rows}
            if len(widths) != 1:
                raise ValueError(f"ragged matrix, row lengths {sorted(widths)}")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError(f"expected {ncols} columns, got {width}")
            self.ncols = width
        else:
            self.ncols = ncols or 0

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "QMatrix":
        if not cols:
            return cls([])
        return cls(zip(*cols), ncols=len(cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self._rows), ncols=self.nrows) if self._rows else QMatrix([], 0)

    @property
    def T(self) -> "QMatrix":
        return self.transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix([[self._rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.transpose().rows
            return QMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                            for r in self._rows], ncols=other.ncols)
        vec = [as_fraction(v) for v in other]
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self._rows)

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self._rows)
        return f"QMatrix({self.nrows}x{self.ncols}: [{body}])"


def _integer_rows(M: QMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; also return the product of the scale factors."""
    rows = []
    scale = Fraction(1)
    for r in M.rows:
        d = math.lcm(*(v.denominator for v in r)) if r else 1
        rows.append([int(v * d) for v in r])
        scale *= d
    return rows, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int, int]:
    """In-place fraction-free elimination. Returns (rank, last pivot, swap parity)."""
    m = len(a)
    n = len(a[0]) if a else 0
    prev = 1
    r = 0
    sign = 1
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        p = a[r][c]
        row_r = a[r]
        for i in range(r + 1, m):
            row_i = a[i]
            f = row_i[c]
            if f:
                for j in range(c + 1, n):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            else:
                for j in range(c + 1, n):
                    row_i[j] = (p * row_i[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, prev, sign


def rank(M: QMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    a, _ = _integer_rows(M)
    # eliminate along the shorter side
    if M.ncols < M.nrows:
        a = [list(col) for col in zip(*a)]
    return _bareiss(a)[0]


def det(M: QMatrix) -> Fraction:
    if M.nrows != M.ncols:
        raise ValueError(f"determinant of non-square {M.shape} matrix")
    if M.nrows == 0:
        return Fraction(1)
    a, scale = _integer_rows(M)
    r, last, sign = _bareiss(a)
    if r < M.nrows:
        return Fraction(0)
    return Fraction(sign * last) / scale


def rref_with_pivots(M: QMatrix) -> tuple[QMatrix, list[int]]:
    a = [list(r) for r in M.rows]
    m, n = M.nrows, M.ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return QMatrix(a, ncols=n), pivots


def rref(M: QMatrix) -> QMatrix:
    return rref_with_pivots(M)[0]


def primitive_integer_vector(vec: Sequence) -> tuple[int, ...]:
    """Scale to coprime integers with the first nonzero entry positive."""
    vec = [as_fraction(v) for v in vec]
    if not any(vec):
        raise ValueError("zero vector has no primitive form")
    d = math.lcm(*(v.denominator for v in vec))
    ints = [int(v * d) for v in vec]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def kernel(M: QMatrix) -> list[tuple[int, ...]]:
    """Basis of the right null space, one primitive integer vector per free column."""
    R, pivots = rref_with_pivots(M)
    n = M.ncols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -R[row, f]
        basis.append(primitive_integer_vector(v))
    return basis


def solve(M: QMatrix, b: Sequence) -> tuple[tuple[Fraction, ...], list[tuple[Fraction, ...]]] | None:
    """Solve ``M x = b``.

    Returns ``(particular, homogeneous_basis)`` or None when inconsistent.
    The particular solution has zeros in every free coordinate.
    """
    b = [as_fraction(v) for v in b]
    if len(b) != M.nrows:
        raise ValueError("right-hand side length mismatch")
    aug = QMatrix([list(r) + [bi] for r, bi in zip(M.rows, b)], ncols=M.ncols + 1)
    R, pivots = rref_with_pivots(aug)
    n = M.ncols
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in enumerate(pivots):
        x[pc] = R[row, n]
    homog = []
    pivset = set(pivots)
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -R[row, f]
        homog.append(tuple(v))
    return tuple(x), homog


def maximal_minors(M: QMatrix, k: int) -> list[Fraction]:
    """All k x k minors; column subsets outermost, both in lexicographic order."""
    if not 0 < k <= min(M.shape):
        raise ValueError(f"minor size {k} invalid for a {M.shape} matrix")
    out = []
    for cols in combinations(range(M.ncols), k):
        for rows in combinations(range(M.nrows), k):
            out.append(det(M.submatrix(rows, cols)))
    return out


def _poly_det(rows: list[list[Poly]], one: Poly) -> Poly:
    # Laplace expansion along rows, memoised on the set of used columns.
    k = len(rows)
    states = {0: one}
    for i in range(k):
        nxt: dict[int, Poly] = {}
        row = rows[i]
        for mask, val in states.items():
            for j in range(k):
                bit = 1 << j
                if mask & bit or row[j].is_zero():
                    continue
                term = val * row[j]
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                key = mask | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        states = {m: v for m, v in nxt.items() if not v.is_zero()}
        if not states:
            return one * 0
    return states.get((1 << k) - 1, one * 0)


def poly_matrix_minors(M: Sequence[Sequence], k: int, nvars: int | None = None,
                       ring: Ring = Ring.OPERATOR) -> tuple[list[Poly], int]:
    """All k x k minors of a matrix with polynomial (or rational) entries.

    Returns ``(nonzero_minors, total_count)``; vanishing minors are dropped
    but counted in the total.  Enumeration order matches ``maximal_minors``.
    """
    rows = [list(r) for r in M]
    if not rows:
        raise ValueError("empty matrix")
    ncols = len(rows[0])
    if not 0 < k <= min(len(rows), ncols):
        raise ValueError(f"minor size {k} invalid for a {len(rows)}x{ncols} matrix")
    for entry in (e for r in rows for e in r):
        if isinstance(entry, Poly):
            nvars, ring = entry.nvars, entry.ring
            break
    if nvars is None:
        nvars = 0
    grid = [[e if isinstance(e, Poly) else Poly.constant(e, nvars, ring) for e in r] for r in rows]
    one = Poly.constant(1, nvars, ring)
    found = []
    total = 0
    for cols in combinations(range(ncols), k):
        for rsel in combinations(range(len(grid)), k):
            total += 1
            d = _poly_det([[grid[i][j] for j in cols] for i in rsel], one)
            if not d.is_zero():
                found.append(d)
    return found, total
