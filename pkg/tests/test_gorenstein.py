import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from gorpoints.exactalg import Poly, QMatrix, Ring, contract, monomials, power_of_linear, rank
from gorpoints.gorenstein import (
    AlphaHasZeroEntry,
    AlphaVector,
    DualDimensionTooSmall,
    KernelDimensionNotOne,
    Verdict,
    alpha_kernel,
    ann_graded,
    apolar_form,
    dgo_test,
    dual_module_dimension,
    inverse_system_generators,
    is_arithmetically_gorenstein,
    verify_g_admissible,
)
from gorpoints.pointset import PointSet, RegularFormError, choose_regular_form, hilbert_data

DGO = PointSet(oracle.coords_of(oracle.load("dgo_example")))
NO_GOR = PointSet(oracle.coords_of(oracle.load("no_gor")))
EIGHT = PointSet(oracle.coords_of(oracle.load("eight_points")))
SIMPLEX = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
NO_GOR_RELATION = (-1, -3, -1, 2, 2, 1)
Y = [Poly.variable(i, 4) for i in range(4)]


# relations among the powers

def test_dgo_example_relation_has_zero_entries():
    res = alpha_kernel(DGO)
    assert isinstance(res, AlphaHasZeroEntry)
    assert res.kernel_vector == (1, 0, 0, -2, 1)
    assert res.zero_indices == (1, 2)


def test_no_gor_relation_space_is_a_plane():
    res = alpha_kernel(NO_GOR)
    assert res == KernelDimensionNotOne(2)
    space = oracle.relation_space(NO_GOR.coordinates(), 2)
    assert len(space) == 2
    relation = sum((L * a for L, a in zip([power_of_linear(p.coords, 1) for p in NO_GOR], NO_GOR_RELATION)),
                   Poly.zero(4))
    assert relation.is_zero()


def test_eight_points_relation_matches_oracle():
    res = alpha_kernel(EIGHT)
    assert isinstance(res, AlphaVector)
    (expected,) = oracle.relation_space(EIGHT.coordinates(), 3)
    assert oracle.proportional(res, expected)
    assert tuple(res) == (50778, 6510, 84630, -50778, -6045, -1365, -2821, 169)


def test_alpha_is_deterministic():
    assert alpha_kernel(EIGHT) == alpha_kernel(EIGHT)
    assert alpha_kernel(PointSet(list(EIGHT.points))).entries == alpha_kernel(EIGHT).entries


# apolar form

def test_simplex_plus_unit_point_form():
    X = PointSet(SIMPLEX + [(1, 1, 1, 1)])
    ap = apolar_form(X, (-1, -1, -1, -1, 1), (1, 1, 1, 1))
    total = Y[0] + Y[1] + Y[2] + Y[3]
    assert ap.form == -(Y[0] ** 2) - Y[1] ** 2 - Y[2] ** 2 - Y[3] ** 2 + total ** 2 / 4


def test_no_gor_form_with_listed_relation():
    ap = apolar_form(NO_GOR, NO_GOR_RELATION, (0, 0, 0, 1))
    q = Y[0] ** 2 + Y[0] * Y[1] + Y[0] * Y[2] * 3 + Y[1] * Y[2] + Y[2] ** 2
    assert ap.form == q * 2
    assert dual_module_dimension(ap.form) == (5, (1, 3, 1))


def test_apolar_form_rejects_singular_z():
    with pytest.raises(RegularFormError):
        apolar_form(EIGHT, alpha_kernel(EIGHT), (0, 0, 0, 1))


def test_apolar_form_rejects_non_relation():
    with pytest.raises(ArithmeticError):
        apolar_form(EIGHT, (1,) * 8, (1, 1, 1, 1))


def test_eight_points_form_matches_oracle():
    cert = is_arithmetically_gorenstein(EIGHT, (1, 1, 1, 1))
    alpha = cert.alpha
    zv = [sum(p.coords) for p in EIGHT]
    expected = {}
    for a, z, p in zip(alpha, zv, EIGHT):
        for m, c in oracle.linear_power(p.coords, 3).items():
            expected[m] = expected.get(m, 0) + a / z * c
    assert dict(cert.F.terms) == {m: c for m, c in expected.items() if c}
    assert cert.dual_dim == 8
    assert cert.apolar_hf == (1, 3, 3, 1)


def test_pure_power_dual_module():
    for s in range(5):
        assert dual_module_dimension(Y[0] ** s) == (s + 1, (1,) * (s + 1))
    assert dual_module_dimension(Poly.zero(4)) == (0, ())


# decisions

def test_certificates_of_examples():
    dgo = is_arithmetically_gorenstein(DGO)
    assert dgo.verdict is Verdict.NOT_GORENSTEIN
    assert isinstance(dgo.failure_reason, AlphaHasZeroEntry)
    nog = is_arithmetically_gorenstein(NO_GOR)
    assert nog.verdict is Verdict.NOT_GORENSTEIN
    assert isinstance(nog.failure_reason, KernelDimensionNotOne)
    eight = is_arithmetically_gorenstein(EIGHT)
    assert eight.is_gorenstein
    assert eight.apolar_hf == eight.hilbert.h_vector == (1, 3, 3, 1)
    bad = is_arithmetically_gorenstein(PointSet(SIMPLEX + [(-1, 0, 0, 1)]))
    assert not bad.is_gorenstein


def test_dual_dimension_too_small_is_reported():
    # seven points of the plane, no six on a conic: h-vector (1,2,3,1) is not symmetric
    pts = [(0, 1, 1), (-1, 0, 1), (0, 0, 1), (0, 1, -1), (1, 0, 1), (-1, -1, 0), (-1, -1, 1)]
    X = PointSet(pts)
    cert = is_arithmetically_gorenstein(X)
    assert cert.hilbert.h_vector == (1, 2, 3, 1)
    assert cert.failure_reason == DualDimensionTooSmall(6, 7)
    assert cert.apolar_hf == (1, 2, 2, 1)
    assert not dgo_test(X).verdict


def test_dgo_oracle_examples():
    res = dgo_test(DGO)
    assert not res.verdict
    assert res.condition_failed == "cayley_bacharach"
    assert dgo_test(EIGHT).verdict
    assert dgo_test(PointSet([(1, 0), (1, 1)])).verdict


def test_small_socle_degree_uses_fallback():
    one = is_arithmetically_gorenstein(PointSet([(1, 2, 3)]))
    assert one.is_gorenstein and one.path == "dgo_fallback"
    assert one.hilbert.socle_degree == 0
    frame = is_arithmetically_gorenstein(PointSet(SIMPLEX))
    assert frame.hilbert.h_vector == (1, 3)
    assert not frame.is_gorenstein and frame.path == "dgo_fallback"
    line = is_arithmetically_gorenstein(PointSet([(1, 0, 0), (0, 1, 0)]))
    assert line.is_gorenstein


def test_every_failure_reason_occurs():
    seen = set()
    for seed in range(300):
        X = PointSet(oracle.random_family(seed))
        cert = is_arithmetically_gorenstein(X)
        if cert.failure_reason is not None:
            seen.add(type(cert.failure_reason))
    assert seen == {KernelDimensionNotOne, AlphaHasZeroEntry, DualDimensionTooSmall}


# inverse system

def test_generators_of_eight_points():
    cert = is_arithmetically_gorenstein(EIGHT, (1, 1, 1, 1))
    gens = inverse_system_generators(EIGHT, cert.alpha, cert.z, 4)
    assert gens.F(1) == cert.F / factorial(3)
    zop = Poly.linear((1, 1, 1, 1), Ring.OPERATOR)
    assert contract(zop, gens.F(2)) == gens.F(1)
    assert contract(zop, gens.F(1)).is_zero()
    assert verify_g_admissible(EIGHT, gens).verdict


def test_no_gor_family():
    gens = inverse_system_generators(NO_GOR, NO_GOR_RELATION, (0, 0, 0, 1), 3)
    res = verify_g_admissible(NO_GOR, gens)
    assert res.ladder_ok
    assert not res.verdict
    assert res.t == 2
    assert res.relation == "superset"
    assert verify_g_admissible(NO_GOR, gens, t=1).relation == "equal"
    x3 = Poly.variable(3, 4, Ring.OPERATOR)
    assert any(g == x3 for g in (a.monic() for a in ann_graded(gens.F(1), 1)))


def test_no_gor_chain_module_in_degree_two():
    # Ann(F_2) o F_3 in degree 2 is spanned by A = y0y1 + y0y2 + y1y2 and B = (y0 + y2)^2
    gens = inverse_system_generators(NO_GOR, NO_GOR_RELATION, (0, 0, 0, 1), 3)
    A = Y[0] * Y[1] + Y[0] * Y[2] + Y[1] * Y[2]
    B = (Y[0] + Y[2]) ** 2
    basis = monomials(4, 2)
    F2, F3 = gens.F(2), gens.F(3)
    images = [contract(g, F3) for g in ann_graded(F2, 2)]
    rows = [p.coefficient_vector(basis) for p in images]
    span = rank(QMatrix(rows))
    both = rank(QMatrix(rows + [A.coefficient_vector(basis), B.coefficient_vector(basis)]))
    assert span == both == 2
    assert (A + B) * 2 == apolar_form(NO_GOR, NO_GOR_RELATION, (0, 0, 0, 1)).form


def test_ann_graded_examples():
    (g,) = ann_graded(Poly.variable(0, 2) ** 2, 1)
    assert g.monic() == Poly.variable(1, 2, Ring.OPERATOR)


# properties

def sets():
    return st.integers(0, 10 ** 6).map(oracle.random_family)


def _relabel(pts, rng):
    n1 = len(pts[0])
    while True:
        A = [[rng.randint(-2, 2) for _ in range(n1)] for _ in range(n1)]
        if rank(QMatrix(A)) == n1:
            break
    moved = []
    for p in pts:
        lam = Fraction(rng.choice([-2, 1, 3]), rng.randint(1, 3))
        moved.append(tuple(lam * sum(a * c for a, c in zip(row, p)) for row in A))
    rng.shuffle(moved)
    return moved


@settings(max_examples=50, deadline=None)
@given(sets())
def test_verdict_matches_independent_oracle(pts):
    assert is_arithmetically_gorenstein(PointSet(pts)).is_gorenstein == oracle.dgo(pts)


@settings(max_examples=60, deadline=None)
@given(sets())
def test_certificate_invariants(pts):
    X = PointSet(pts)
    cert = is_arithmetically_gorenstein(X)
    assert cert.is_gorenstein == dgo_test(X).verdict
    if cert.F is not None:
        hf = cert.apolar_hf
        assert hf == hf[::-1]
        assert cert.dual_dim <= X.r
    if cert.is_gorenstein:
        assert cert.apolar_hf == cert.hilbert.h_vector
        s = cert.hilbert.socle_degree
        # the top generator has degree 2s; keep its monomial basis small
        if s >= 2 and comb(X.n + 2 * s, X.n) <= 220:
            gens = inverse_system_generators(X, cert.alpha, cert.z, s + 1)
            assert verify_g_admissible(X, gens).verdict


@settings(max_examples=40, deadline=None)
@given(sets(), st.integers(0, 2 ** 32))
def test_verdict_invariance(pts, seed):
    rng = random.Random(seed)
    base = is_arithmetically_gorenstein(PointSet(pts)).verdict
    assert is_arithmetically_gorenstein(PointSet(_relabel(pts, rng))).verdict == base


@settings(max_examples=40, deadline=None)
@given(sets(), st.integers(0, 2 ** 32))
def test_z_independence_and_scalar_freedom(pts, seed):
    X = PointSet(pts)
    cert = is_arithmetically_gorenstein(X)
    if not cert.is_gorenstein or cert.hilbert.socle_degree < 2:
        return
    rng = random.Random(seed)
    z2 = choose_regular_form(X, tuple(rng.randint(-4, 4) for _ in range(X.n + 1)))
    other = is_arithmetically_gorenstein(X, z2)
    assert other.verdict == cert.verdict
    assert other.alpha == cert.alpha
    assert other.dual_dim == cert.dual_dim
    lam = Fraction(rng.choice([-7, -1, 2, 9]), rng.randint(1, 5))
    scaled = apolar_form(X, [a * lam for a in cert.alpha], cert.z)
    assert scaled.form == cert.F * lam
    assert dual_module_dimension(scaled.form)[0] == cert.dual_dim


@settings(max_examples=40, deadline=None)
@given(sets())
def test_ladder_and_annihilator_dimensions(pts):
    X = PointSet(pts)
    hd = hilbert_data(X)
    s = hd.socle_degree
    res = alpha_kernel(X, hd) if s >= 1 else None
    if s < 1 or not isinstance(res, AlphaVector):
        return
    z = choose_regular_form(X)
    gens = inverse_system_generators(X, res, z, 3)
    zop = Poly.linear(z, Ring.OPERATOR)
    assert contract(zop, gens.F(1)).is_zero()
    for t in (2, 3):
        assert contract(zop, gens.F(t)) == gens.F(t - 1)
    F = apolar_form(X, res, z).form
    if F.is_zero():
        return
    _, ahf = dual_module_dimension(F)
    for d in range(F.degree + 1):
        assert len(ann_graded(F, d)) == comb(X.n + d, X.n) - ahf[F.degree - d]
