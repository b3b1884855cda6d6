"""Deciding whether a finite point set is arithmetically Gorenstein.

Main route: with ``s`` the socle degree of ``X`` and ``L_i`` the dual linear
forms of the points, ``X`` is arithmetically Gorenstein iff there are
``alpha_i`` with ``sum alpha_i L_i^(s-1) = 0`` such that the form

    F = sum_i alpha_i / z(P_i) * L_i^s

generates an inverse system ``<F>`` of dimension at least ``r`` (for any
linear ``z`` not vanishing on ``X``).  The relation among the
``L_i^(s-1)`` is then unique up to scalar and has no zero entry.

Oracle route: the Hilbert-function test (symmetric h-vector plus the
Cayley-Bacharach property for every drop-one subset).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Sequence

from .exactalg import (
    Poly,
    QMatrix,
    Ring,
    as_fraction,
    contract,
    kernel,
    monomials,
    power_of_linear,
    primitive_integer_vector,
    rank,
)
from .pointset import (
    HilbertData,
    PointSet,
    RegularFormError,
    choose_regular_form,
    evaluate_form,
    hilbert_data,
    hilbert_function,
    power_matrix,
)


class Verdict(str, enum.Enum):
    GORENSTEIN = "gorenstein"
    NOT_GORENSTEIN = "not_gorenstein"


@dataclass(frozen=True)
class KernelDimensionNotOne:
    dimension: int
    code: ClassVar[str] = "kernel_dimension_not_one"


@dataclass(frozen=True)
class AlphaHasZeroEntry:
    zero_indices: tuple[int, ...]
    kernel_vector: tuple[int, ...]
    code: ClassVar[str] = "alpha_has_zero_entry"


@dataclass(frozen=True)
class DualDimensionTooSmall:
    found: int
    required: int
    code: ClassVar[str] = "dual_dimension_too_small"


FailureReason = KernelDimensionNotOne | AlphaHasZeroEntry | DualDimensionTooSmall


@dataclass(frozen=True)
class AlphaVector:
    """Coefficients of the linear relation among the ``L_i^(s-1)``.

    Stored as a primitive integer vector with positive first nonzero entry,
    so two relations agree up to scalar iff they are equal.
    """

    entries: tuple[Fraction, ...]
    kernel_dimension: int = 1

    @classmethod
    def normalized(cls, vec: Sequence, kernel_dimension: int = 1) -> "AlphaVector":
        return cls(tuple(Fraction(v) for v in primitive_integer_vector(vec)), kernel_dimension)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def equals_up_to_scalar(self, other: Sequence) -> bool:
        return primitive_integer_vector(self.entries) == primitive_integer_vector(list(other))


def alpha_kernel(X: PointSet, hilbert: HilbertData | None = None) -> AlphaVector | FailureReason:
    """The relation ``sum alpha_i L_i^(s-1) = 0``, or why it is unusable.

    Returns an :class:`AlphaVector` when the relation space is a line spanned
    by a vector with no zero entry, otherwise the matching failure reason.
    """
    hd = hilbert or hilbert_data(X)
    s = hd.socle_degree
    if s < 1:
        raise ValueError("relation among L_i^(s-1) needs socle degree >= 1")
    basis = kernel(power_matrix(X, s - 1).T)
    if len(basis) != 1:
        return KernelDimensionNotOne(len(basis))
    vec = basis[0]
    zeros = tuple(i for i, v in enumerate(vec) if v == 0)
    if zeros:
        return AlphaHasZeroEntry(zeros, vec)
    return AlphaVector.normalized(vec)


@dataclass(frozen=True)
class ApolarForm:
    form: Poly
    z: tuple[Fraction, ...]
    alpha: AlphaVector | tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return self.form.degree


def _z_values(X: PointSet, z: Sequence) -> list[Fraction]:
    vals = [evaluate_form(z, p) for p in X]
    bad = [i for i, v in enumerate(vals) if v == 0]
    if bad:
        raise RegularFormError(f"linear form {tuple(str(c) for c in z)} vanishes at points {bad}")
    return vals


def _z_operator(z: Sequence) -> Poly:
    return Poly.linear(z, Ring.OPERATOR)


def apolar_form(X: PointSet, alpha: AlphaVector | Sequence, z: Sequence,
                s: int | None = None) -> ApolarForm:
    """``F = sum_i alpha_i / z(P_i) * L_i^s``; checks ``z o F = 0``."""
    z = tuple(as_fraction(c) for c in z)
    if s is None:
        s = hilbert_data(X).socle_degree
    if len(alpha) != X.r:
        raise ValueError(f"alpha has {len(alpha)} entries for {X.r} points")
    zvals = _z_values(X, z)
    F = Poly.zero(X.n + 1)
    for a, zv, p in zip(alpha, zvals, X):
        a = as_fraction(a)
        if a:
            F = F + power_of_linear(p.coords, s) * (a / zv)
    if not isinstance(alpha, AlphaVector):
        alpha = tuple(as_fraction(a) for a in alpha)
    if s >= 1 and not contract(_z_operator(z), F).is_zero():
        raise ArithmeticError("z o F != 0: alpha does not annihilate the L_i^(s-1)")
    return ApolarForm(F, z, alpha)


def catalecticant(F: Poly, d: int) -> QMatrix:
    """Row for each degree-d monomial ``x^g`` holding the coefficients of ``x^g o F``.

    Columns index the degree ``deg F - d`` monomials of the dual ring.
    """
    nv = F.nvars
    rows_basis = monomials(nv, d)
    cols_basis = monomials(nv, F.degree - d)
    col_index = {m: i for i, m in enumerate(cols_basis)}
    out = []
    for g in rows_basis:
        row = [Fraction(0)] * len(cols_basis)
        for b, c in F.terms.items():
            factor = 1
            for gi, bi in zip(g, b):
                if gi > bi:
                    factor = 0
                    break
                if gi:
                    factor *= math.perm(bi, gi)
            if factor:
                row[col_index[tuple(bi - gi for gi, bi in zip(g, b))]] += c * factor
        out.append(row)
    return QMatrix(out, ncols=len(cols_basis))


def dual_module_dimension(F: Poly) -> tuple[int, tuple[int, ...]]:
    """``(dim <F>, Hilbert function of the apolar algebra of F)``.

    Degree ``j`` of ``<F>`` is spanned by the contractions of ``F`` by all
    monomials of degree ``s - j``.
    """
    if F.is_zero():
        return 0, ()
    if not F.is_homogeneous():
        raise ValueError("F must be homogeneous")
    s = F.degree
    hf = tuple(rank(catalecticant(F, s - j)) for j in range(s + 1))
    return sum(hf), hf


@dataclass(frozen=True)
class DGOResult:
    verdict: bool
    condition_failed: str | None = None
    witness: int | None = None
    degree: int | None = None
    hilbert: HilbertData | None = None

    @property
    def detail(self) -> str:
        if self.verdict:
            return "symmetric h-vector and every drop-one subset keeps the Hilbert function below s"
        if self.condition_failed == "symmetry":
            return f"h-vector {list(self.hilbert.h_vector)} is not symmetric"
        return (f"dropping point {self.witness} lowers the Hilbert function "
                f"in degree {self.degree} < s")


def dgo_test(X: PointSet, hilbert: HilbertData | None = None) -> DGOResult:
    """Hilbert-function characterisation of Gorenstein point sets.

    ``X`` is arithmetically Gorenstein iff its h-vector is symmetric and
    ``HF_Y(t) = HF_X(t)`` for ``t < s`` and every ``Y`` obtained by dropping one point.
    """
    hd = hilbert or hilbert_data(X)
    s, h = hd.socle_degree, hd.h_vector
    if any(h[t] != h[s - t] for t in range(s + 1)):
        return DGOResult(False, "symmetry", hilbert=hd)
    for i in range(X.r if s > 0 else 0):
        Y = X.without(i)
        for t in range(s):
            if hilbert_function(Y, t) != hd.value(t):
                return DGOResult(False, "cayley_bacharach", witness=i, degree=t, hilbert=hd)
    return DGOResult(True, hilbert=hd)


@dataclass(frozen=True)
class GorensteinCertificate:
    verdict: Verdict
    hilbert: HilbertData
    z: tuple[Fraction, ...] | None = None
    failure_reason: FailureReason | None = None
    alpha: AlphaVector | None = None
    apolar_form: ApolarForm | None = None
    apolar_hf: tuple[int, ...] = ()
    dual_dim: int = 0
    path: str = "apolar"
    dgo: DGOResult | None = field(default=None, compare=False)

    @property
    def is_gorenstein(self) -> bool:
        return self.verdict is Verdict.GORENSTEIN

    @property
    def F(self) -> Poly | None:
        return self.apolar_form.form if self.apolar_form else None


def _fallback(X: PointSet, hd: HilbertData, z_hint) -> GorensteinCertificate:
    # socle degree <= 1: the Hilbert-function oracle gives the verdict; the
    # relation machinery still runs where it makes sense, to fill the certificate
    dgo = dgo_test(X, hd)
    z = choose_regular_form(X, z_hint)
    if hd.socle_degree == 0:
        alpha = AlphaVector((Fraction(1),))
        ap = apolar_form(X, alpha, z, s=0)
        dim, ahf = dual_module_dimension(ap.form)
        assert dgo.verdict
        return GorensteinCertificate(Verdict.GORENSTEIN, hd, z, None, alpha, ap, ahf, dim,
                                     "dgo_fallback", dgo)
    res = alpha_kernel(X, hd)
    if not isinstance(res, AlphaVector):
        assert not dgo.verdict
        return GorensteinCertificate(Verdict.NOT_GORENSTEIN, hd, z, res, path="dgo_fallback", dgo=dgo)
    ap = apolar_form(X, res, z, s=hd.socle_degree)
    dim, ahf = dual_module_dimension(ap.form)
    verdict = Verdict.GORENSTEIN if dgo.verdict else Verdict.NOT_GORENSTEIN
    reason = None if dgo.verdict else DualDimensionTooSmall(dim, X.r)
    assert dgo.verdict == (dim >= X.r)
    return GorensteinCertificate(verdict, hd, z, reason, res, ap, ahf, dim, "dgo_fallback", dgo)


def is_arithmetically_gorenstein(X: PointSet, z_hint: Sequence | None = None) -> GorensteinCertificate:
    """Decide Gorensteinness of ``X`` and return the supporting certificate."""
    hd = hilbert_data(X)
    s = hd.socle_degree
    if s <= 1:
        return _fallback(X, hd, z_hint)
    res = alpha_kernel(X, hd)
    if not isinstance(res, AlphaVector):
        return GorensteinCertificate(Verdict.NOT_GORENSTEIN, hd, failure_reason=res)
    z = choose_regular_form(X, z_hint)
    ap = apolar_form(X, res, z, s=s)
    dim, ahf = dual_module_dimension(ap.form)
    # <F> sits inside the inverse system of the Artinian reduction, of length r
    assert dim <= X.r, f"dim <F> = {dim} exceeds r = {X.r}"
    if dim < X.r:
        return GorensteinCertificate(Verdict.NOT_GORENSTEIN, hd, z, DualDimensionTooSmall(dim, X.r),
                                     res, ap, ahf, dim)
    assert ahf == hd.h_vector, f"apolar HF {ahf} differs from h-vector {hd.h_vector}"
    return GorensteinCertificate(Verdict.GORENSTEIN, hd, z, None, res, ap, ahf, dim)


@dataclass(frozen=True)
class InverseSystemGens:
    gens: tuple[Poly, ...]
    z: tuple[Fraction, ...]
    alpha: tuple[Fraction, ...]
    socle_degree: int

    @property
    def tmax(self) -> int:
        return len(self.gens)

    def F(self, t: int) -> Poly:
        """The generator ``F_t`` (1-based)."""
        if not 1 <= t <= self.tmax:
            raise IndexError(f"F_{t} not computed (tmax = {self.tmax})")
        return self.gens[t - 1]


def inverse_system_generators(X: PointSet, alpha: AlphaVector | Sequence, z: Sequence, tmax: int,
                              s: int | None = None) -> InverseSystemGens:
    """``F_t = 1/(t+s-1)! * sum_i alpha_i / z(P_i)^t * L_i^(t+s-1)`` for ``t = 1..tmax``."""
    if tmax < 1:
        raise ValueError("tmax must be at least 1")
    z = tuple(as_fraction(c) for c in z)
    if s is None:
        s = hilbert_data(X).socle_degree
    zvals = _z_values(X, z)
    alpha = tuple(as_fraction(a) for a in alpha)
    zop = _z_operator(z)
    gens = []
    for t in range(1, tmax + 1):
        deg = t + s - 1
        F = Poly.zero(X.n + 1)
        for a, zv, p in zip(alpha, zvals, X):
            if a:
                F = F + power_of_linear(p.coords, deg) * (a / zv ** t)
        F = F / math.factorial(deg)
        down = contract(zop, F)
        expected = gens[-1] if gens else Poly.zero(X.n + 1)
        if down != expected:
            raise ArithmeticError(f"contraction ladder broken at t = {t}")
        gens.append(F)
    return InverseSystemGens(tuple(gens), z, alpha, s)


def ann_graded(F: Poly, d: int) -> list[Poly]:
    """Basis of the degree-d piece of the annihilator of ``F`` in the operator ring."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if F.is_zero():
        raise ValueError("annihilator of zero is everything")
    basis = monomials(F.nvars, d)
    cat = catalecticant(F, d)
    return [Poly.from_vector(v, basis, F.nvars, Ring.OPERATOR) for v in kernel(cat.T)]


@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    dim_chain: int      # dim of (Ann(F_t) o F_{t+1}) in this degree
    dim_dual: int       # dim of <F_1> in this degree
    dim_sum: int

    @property
    def relation(self) -> str:
        if self.dim_chain == self.dim_dual == self.dim_sum:
            return "equal"
        if self.dim_sum == self.dim_chain:
            return "superset"
        if self.dim_sum == self.dim_dual:
            return "subset"
        return "incomparable"


def compare_chain_step(gens: InverseSystemGens, t: int) -> list[DegreeComparison]:
    """Compare ``Ann(F_t) o F_{t+1}`` with ``<F_1>`` degree by degree (degrees 0..s)."""
    if gens.tmax < t + 1:
        raise ValueError(f"need F_1..F_{t + 1}, only {gens.tmax} generators given")
    s = gens.socle_degree
    Ft, Fnext, F1 = gens.F(t), gens.F(t + 1), gens.F(1)
    top = Fnext.degree  # t + s
    out = []
    for j in range(s + 1):
        d = top - j
        ann = kernel(catalecticant(Ft, d).T)
        image = catalecticant(Fnext, d)
        chain_rows = [image.T @ v for v in ann]
        dual_rows = list(catalecticant(F1, s - j).rows)
        ncols = len(monomials(F1.nvars, j))
        rc = rank(QMatrix(chain_rows, ncols=ncols))
        rd = rank(QMatrix(dual_rows, ncols=ncols))
        rs = rank(QMatrix(chain_rows + dual_rows, ncols=ncols))
        out.append(DegreeComparison(j, rc, rd, rs))
    return out


@dataclass(frozen=True)
class GAdmissibility:
    verdict: bool
    ladder_ok: bool
    t: int
    comparisons: tuple[DegreeComparison, ...]

    @property
    def relation(self) -> str:
        rels = {c.relation for c in self.comparisons}
        if rels == {"equal"}:
            return "equal"
        if rels <= {"equal", "superset"}:
            return "superset"
        if rels <= {"equal", "subset"}:
            return "subset"
        return "incomparable"

    @property
    def detail(self) -> str:
        if not self.ladder_ok:
            return "contraction ladder z o F_t = F_(t-1), z o F_1 = 0 fails"
        if self.verdict:
            return f"at t={self.t}, Ann(F_{self.t}) o F_{self.t + 1} = <F_1>"
        return f"at t={self.t}, Ann(F_{self.t}) o F_{self.t + 1} is a {self.relation} of <F_1>"


def verify_g_admissible(X: PointSet, gens: InverseSystemGens, t: int | None = None) -> GAdmissibility:
    """Cross-check the two admissibility conditions on an emitted family.

    Condition (1) is the ladder ``z o F_t = F_(t-1)`` with ``z o F_1 = 0``.
    Condition (2) only needs checking at ``t = s`` since the chain of
    modules ``Ann(F_t) o F_(t+1)`` is stable from there on; ``t`` may be
    overridden to inspect an earlier link.
    """
    s = gens.socle_degree
    if t is None:
        t = s
    if gens.tmax < t + 1:
        raise ValueError(f"verify_g_admissible needs tmax >= {t + 1}, got {gens.tmax}")
    zop = _z_operator(gens.z)
    ladder = contract(zop, gens.F(1)).is_zero() and all(
        contract(zop, gens.F(k)) == gens.F(k - 1) for k in range(2, gens.tmax + 1))
    comps = tuple(compare_chain_step(gens, t))
    ok = ladder and all(c.relation == "equal" for c in comps)
    return GAdmissibility(ok, ladder, t, comps)
