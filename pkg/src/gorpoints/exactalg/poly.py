"""Sparse multivariate polynomials with exact rational coefficients.

Two rings share one representation: the operator ring ``R = k[x_0..x_n]``
and the dual ring ``Gamma = k[y_0..y_n]``.  The operator ring acts on the
dual ring by contraction (differentiation with the factorial convention
``x^a o y^b = b!/(b-a)! y^(b-a)``).
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

ExpVec = tuple[int, ...]


class DimensionError(ValueError):
    """Operands live over different numbers of variables."""


class RingError(TypeError):
    """Operands live in incompatible rings."""


class Ring(enum.Enum):
    OPERATOR = "R"
    DUAL = "Gamma"

    @property
    def prefix(self) -> str:
        return "x" if self is Ring.OPERATOR else "y"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: nothing in this package is allowed to lose precision.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[ExpVec, ...]:
    """All exponent vectors of total ``degree`` in ``nvars`` variables.

    Ordered lexicographically with ``x_0 > x_1 > ... > x_n``, so for
    degree 2 in 4 variables the order is ``x0^2, x0x1, x0x2, x0x3, x1^2, ...``.
    """
    if degree < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


def monomial_index(nvars: int, degree: int) -> dict[ExpVec, int]:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


def multinomial(exps: Sequence[int]) -> int:
    out = math.factorial(sum(exps))
    for e in exps:
        out //= math.factorial(e)
    return out


class Poly:
    """Immutable sparse polynomial ``{exponent vector: Fraction}``."""

    __slots__ = ("ring", "nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[ExpVec, object] | Iterable = (), nvars: int | None = None,
                 ring: Ring = Ring.DUAL):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[ExpVec, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if nvars is None:
                nvars = len(exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = clean.get(exp, Fraction(0)) + as_fraction(coeff)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self.ring = ring
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: dict[ExpVec, Fraction], nvars: int, ring: Ring) -> "Poly":
        p = object.__new__(cls)
        p.ring = ring
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int, ring: Ring = Ring.DUAL) -> "Poly":
        return cls._raw({}, nvars, ring)

    @classmethod
    def constant(cls, c, nvars: int, ring: Ring = Ring.DUAL) -> "Poly":
        c = as_fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars, ring)

    @classmethod
    def variable(cls, i: int, nvars: int, ring: Ring = Ring.DUAL) -> "Poly":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        exp = tuple(1 if k == i else 0 for k in range(nvars))
        return cls._raw({exp: Fraction(1)}, nvars, ring)

    @classmethod
    def linear(cls, coeffs: Sequence, ring: Ring = Ring.DUAL) -> "Poly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_fraction(c)
            if c:
                terms[tuple(1 if k == i else 0 for k in range(n))] = c
        return cls._raw(terms, n, ring)

    @classmethod
    def from_vector(cls, vec: Sequence, basis: Sequence[ExpVec], nvars: int,
                    ring: Ring = Ring.DUAL) -> "Poly":
        if len(vec) != len(basis):
            raise DimensionError("coefficient vector and basis differ in length")
        return cls(zip(basis, vec), nvars=nvars, ring=ring)

    # queries

    @property
    def terms(self) -> Mapping[ExpVec, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exp: ExpVec) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw({e: c for e, c in self._terms.items() if sum(e) == d}, self.nvars, self.ring)

    def coefficient_vector(self, basis: Sequence[ExpVec]) -> tuple[Fraction, ...]:
        idx = set(basis)
        stray = [e for e in self._terms if e not in idx]
        if stray:
            raise ValueError(f"terms {stray[:3]} are not in the given basis")
        return tuple(self._terms.get(e, Fraction(0)) for e in basis)

    def multidegree(self, blocks: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
        """Set of block degrees over all terms (a singleton iff multihomogeneous)."""
        return {tuple(sum(e[i] for i in block) for block in blocks) for e in self._terms}

    def sorted_terms(self) -> list[tuple[ExpVec, Fraction]]:
        """Terms by decreasing degree, then lexicographically decreasing exponent."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_coefficient(self) -> Fraction:
        return self.sorted_terms()[0][1] if self._terms else Fraction(0)

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient())

    def evaluate(self, values: Sequence) -> Fraction:
        if len(values) != self.nvars:
            raise DimensionError(f"expected {self.nvars} values, got {len(values)}")
        vals = [as_fraction(v) for v in values]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    # arithmetic

    def _check(self, other: "Poly") -> None:
        if other.nvars != self.nvars:
            raise DimensionError(f"{self.nvars} vs {other.nvars} variables")
        if other.ring is not self.ring:
            raise RingError(f"cannot combine {self.ring.name} and {other.ring.name} polynomials")

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            return Poly.constant(other, self.nvars, self.ring)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out, self.nvars, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()}, self.nvars, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly.zero(self.nvars, self.ring)
            return Poly._raw({e: v * c for e, v in self._terms.items()}, self.nvars, self.ring)
        self._check(other)
        out: dict[ExpVec, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, self.nvars, self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.nvars, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.nvars == other.nvars and self.ring is other.ring
                    and self._terms == other._terms)
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = [f"{self.ring.prefix}{i}" for i in range(self.nvars)]
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.ring.name}, {self.to_str()!r})"


def contract(op: Poly, target: Poly) -> Poly:
    """Apolarity action of an operator-ring element on a dual-ring element."""
    if op.nvars != target.nvars:
        raise DimensionError(f"operator has {op.nvars} variables, target has {target.nvars}")
    if op.ring is not Ring.OPERATOR or target.ring is not Ring.DUAL:
        raise RingError("contract expects (operator-ring poly, dual-ring poly)")
    out: dict[ExpVec, Fraction] = {}
    for a, ca in op._terms.items():
        for b, cb in target._terms.items():
            factor = 1
            for ai, bi in zip(a, b):
                if ai > bi:
                    factor = 0
                    break
                if ai:
                    factor *= math.perm(bi, ai)
            if not factor:
                continue
            e = tuple(bi - ai for ai, bi in zip(a, b))
            out[e] = out.get(e, 0) + ca * cb * factor
    return Poly._raw({e: c for e, c in out.items() if c}, target.nvars, Ring.DUAL)


def power_of_linear(coeffs: Sequence, t: int, ring: Ring = Ring.DUAL) -> Poly:
    """Expand ``(sum_i coeffs[i] * y_i) ** t`` by the multinomial theorem."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    coeffs = [as_fraction(c) for c in coeffs]
    nvars = len(coeffs)
    support = [i for i, c in enumerate(coeffs) if c]
    if not support:
        return Poly.constant(1, nvars, ring) if t == 0 else Poly.zero(nvars, ring)
    terms = {}
    for sub in monomials(len(support), t):
        c = Fraction(multinomial(sub))
        exp = [0] * nvars
        for i, e in zip(support, sub):
            exp[i] = e
            if e:
                c *= coeffs[i] ** e
        terms[tuple(exp)] = c
    return Poly._raw(terms, nvars, ring)
