"""Independent reference computations built on sympy.

Nothing here imports from gorpoints; tests compare the package against these.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import sympy as sp

DATA = Path(__file__).parent / "data"


def load(name: str) -> dict:
    return json.loads((DATA / f"{name}.json").read_text())


def coords_of(doc: dict) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(c) for c in p) for p in doc["points"]]


def ys(nvars: int):
    return sp.symbols(f"y0:{nvars}")


def to_expr(terms: dict, nvars: int):
    y = ys(nvars)
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * sp.Mul(*[v ** e for v, e in zip(y, exp)])
                    for exp, c in terms.items()])


def expr_terms(expr, nvars: int) -> dict:
    """Exponent-vector dict of a sympy expression, coefficients as Fractions."""
    expr = sp.expand(expr)
    if expr == 0:
        return {}
    P = sp.Poly(expr, *ys(nvars))
    return {m: Fraction(int(c.p), int(c.q)) for m, c in P.terms()}


def contract(op_terms: dict, target_terms: dict, nvars: int) -> dict:
    """Contraction is differentiation: x^a o y^b = d^a/dy^a (y^b)."""
    y = ys(nvars)
    f = to_expr(target_terms, nvars)
    total = 0
    for exp, c in op_terms.items():
        g = f
        for v, e in zip(y, exp):
            if e:
                g = sp.diff(g, v, e)
        total += sp.Rational(c.numerator, c.denominator) * g
    return expr_terms(total, nvars)


def linear_power(coords, j: int) -> dict:
    n1 = len(coords)
    L = sum(sp.Rational(c.numerator, c.denominator) * v for c, v in zip(coords, ys(n1)))
    return expr_terms(L ** j, n1) if j else {(0,) * n1: Fraction(1)}


def power_matrix(points, j: int) -> sp.Matrix:
    """Rows are coefficient vectors of ``L_i^j``; columns any fixed monomial order."""
    expansions = [linear_power(p, j) for p in points]
    mons = sorted({m for t in expansions for m in t})
    return sp.Matrix([[sp.Rational(t[m].numerator, t[m].denominator) if m in t else 0 for m in mons]
                      for t in expansions]) if mons else sp.zeros(len(points), 1)


def hf(points, j: int) -> int:
    return power_matrix(points, j).rank()


def h_vector(points) -> tuple[int, ...]:
    r = len(points)
    vals = []
    j = 0
    while True:
        vals.append(hf(points, j))
        if vals[-1] == r:
            break
        j += 1
    return tuple(b - a for a, b in zip([0] + vals[:-1], vals))


def dgo(points) -> bool:
    """Symmetric h-vector plus the drop-one Cayley-Bacharach condition."""
    h = h_vector(points)
    s = len(h) - 1
    if h != h[::-1]:
        return False
    for i in range(len(points)):
        Y = points[:i] + points[i + 1:]
        for t in range(s):
            if hf(Y, t) != hf(points, t):
                return False
    return True


def relation_space(points, s: int) -> list[tuple[Fraction, ...]]:
    M = power_matrix(points, s - 1).T
    out = []
    for v in M.nullspace():
        out.append(tuple(Fraction(int(x.p), int(x.q)) for x in v))
    return out


def minors_vanish(M: sp.Matrix) -> bool:
    k = min(M.shape)
    return all(M.extract(list(rs), list(cs)).det() == 0
               for rs in combinations(range(M.rows), k) for cs in combinations(range(M.cols), k))


def proportional(u, v) -> bool:
    u, v = list(u), list(v)
    if len(u) != len(v):
        return False
    i = next((k for k, x in enumerate(u) if x), None)
    if i is None or v[i] == 0:
        return False
    lam = Fraction(v[i]) / Fraction(u[i])
    return all(Fraction(b) == lam * Fraction(a) for a, b in zip(u, v))


# random point sets

def rational(rng: random.Random, B: int = 5, qmax: int = 3) -> Fraction:
    return Fraction(rng.randint(-B, B), rng.randint(1, qmax))


def distinct(points) -> bool:
    seen = set()
    for p in points:
        if not any(p):
            return False
        lead = next(c for c in p if c)
        key = tuple(c / lead for c in p)
        if key in seen:
            return False
        seen.add(key)
    return True


def random_point_set(rng: random.Random, n: int, r: int, B: int = 5, qmax: int = 3):
    while True:
        pts = [tuple(rational(rng, B, qmax) for _ in range(n + 1)) for _ in range(r)]
        if distinct(pts):
            return pts


def grid_points(rng: random.Random, a: int, b: int):
    """``a x b`` grid in the plane z0 = 1: a complete intersection, hence Gorenstein."""
    xs = rng.sample(range(-5, 6), a)
    ys_ = rng.sample(range(-5, 6), b)
    return [(Fraction(1), Fraction(x), Fraction(y)) for x in xs for y in ys_]


KINDS = ("uniform", "near_generic", "grid", "collinear", "small", "embedded_grid")


def family(rng: random.Random, kind: str):
    """One seeded point set (n <= 4, r <= 10) of the given kind."""
    if kind == "uniform":
        n = rng.randint(1, 4)
        return random_point_set(rng, n, rng.randint(1, 10))
    if kind == "near_generic":
        n = rng.randint(1, 4)
        return random_point_set(rng, n, min(10, n + rng.choice([1, 2, 3])))
    if kind == "grid":
        a, b = rng.choice([(2, 2), (2, 3), (3, 3), (2, 4), (2, 5), (3, 2)])
        return grid_points(rng, a, b)
    if kind == "collinear":
        # points on a coordinate line, so every coordinate stays within the bounds
        n = rng.randint(2, 4)
        i, j = rng.sample(range(n + 1), 2)
        while True:
            pts = []
            for _ in range(rng.randint(2, 6)):
                p = [Fraction(0)] * (n + 1)
                p[i], p[j] = rational(rng), rational(rng)
                pts.append(tuple(p))
            if distinct(pts):
                return pts
    if kind == "small":
        return random_point_set(rng, rng.randint(2, 3), rng.randint(3, 8), B=1, qmax=1)
    a, b = rng.choice([(2, 2), (2, 3), (3, 3)])
    pts = [(x, y, z, Fraction(0)) for x, y, z in grid_points(rng, a, b)]
    if rng.random() < 0.5:
        pts.append(tuple(rational(rng) for _ in range(4)))
        if not distinct(pts):
            pts.pop()
    return pts


def mixed_families(seed: int, count: int):
    """``count`` seeded point sets cycling through every kind."""
    rng = random.Random(seed)
    return [(KINDS[k % len(KINDS)], family(rng, KINDS[k % len(KINDS)])) for k in range(count)]


def random_family(seed: int):
    rng = random.Random(seed)
    return family(rng, rng.choice(KINDS))
