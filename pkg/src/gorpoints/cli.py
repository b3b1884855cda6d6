"""Command-line front end.

Reads a JSON points document, runs one subcommand and writes a single JSON
document to stdout.  Rationals are always strings ``"p/q"`` (``"p"`` when
integral); no floating-point number appears in any output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction
from typing import Any, Sequence

from .exactalg import Poly, Ring, as_fraction, kernel
from .gorenstein import (
    AlphaVector,
    alpha_kernel,
    apolar_form,
    dgo_test,
    dual_module_dimension,
    inverse_system_generators,
    is_arithmetically_gorenstein,
    verify_g_admissible,
)
from .lifting import is_artinian_reduction, n0_table, waring_data
from .locus import LocusProblem, complete_to_gorenstein, minor_equations
from .pointset import (
    PointSet,
    choose_regular_form,
    hilbert_data,
    hilbert_function,
    power_matrix,
    validate,
)

log = logging.getLogger("gorpoints")

THREADS_ENV = "GORPOINTS_THREADS"


class InputError(Exception):
    """Malformed input document or arguments."""


# serialization

def q(x) -> str:
    return str(Fraction(x))


def qs(xs) -> list[str]:
    return [q(x) for x in xs]


def _parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"{where}: floating-point value {value!r} not allowed; use \"p/q\"")
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"{where}: cannot parse {value!r} as a rational") from None


def _parse_vector(value: Any, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of coordinates")
    return tuple(_parse_rational(v, f"{where}[{i}]") for i, v in enumerate(value))


def load_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text, parse_float=lambda s: float(s))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def parse_points_document(doc: Any) -> tuple[PointSet, tuple[Fraction, ...] | None, str | None]:
    """Turn a points document into ``(PointSet, z_hint, name)``."""
    if not isinstance(doc, dict):
        raise InputError("document root must be an object")
    if "points" not in doc:
        raise InputError("missing field 'points'")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise InputError("points: expected a nonempty list")
    coords = [_parse_vector(p, f"points[{i}]") for i, p in enumerate(raw)]
    widths = {len(c) for c in coords}
    if len(widths) != 1:
        raise InputError(f"points: coordinate vectors have different lengths {sorted(widths)}")
    if widths.pop() < 2:
        raise InputError("points: need at least two coordinates per point")
    for i, c in enumerate(coords):
        if not any(c):
            raise InputError(f"points[{i}]: the zero vector is not a projective point")
    seen: dict[tuple, int] = {}
    for i, c in enumerate(coords):
        lead = next(v for v in c if v)
        key = tuple(v / lead for v in c)
        if key in seen:
            raise InputError(f"points[{seen[key]}] and points[{i}] are the same projective point")
        seen[key] = i
    X = PointSet(coords)
    z = doc.get("z_hint")
    z_hint = _parse_vector(z, "z_hint") if z is not None else None
    if z_hint is not None and len(z_hint) != X.n + 1:
        raise InputError(f"z_hint: expected {X.n + 1} coefficients")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("name: expected a string")
    return X, z_hint, name


def points_document(X: PointSet, z_hint: Sequence | None = None, name: str | None = None) -> dict:
    doc: dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    doc["points"] = [qs(p.coords) for p in X]
    if z_hint is not None:
        doc["z_hint"] = qs(z_hint)
    return doc


def poly_document(F: Poly, pretty: bool = False, names: Sequence[str] | None = None) -> dict:
    doc = {
        "nvars": F.nvars,
        "terms": [{"exponents": list(e), "coefficient": q(c)} for e, c in F.sorted_terms()],
    }
    if pretty:
        doc["pretty"] = F.to_str(names)
    return doc


def parse_poly_document(doc: Any, where: str = "form") -> Poly:
    if isinstance(doc, dict) and "apolar_form" in doc and "terms" not in doc:
        doc = doc["apolar_form"]
    if not isinstance(doc, dict) or "terms" not in doc:
        raise InputError(f"{where}: expected an object with a 'terms' list")
    terms = doc["terms"]
    if not isinstance(terms, list):
        raise InputError(f"{where}.terms: expected a list")
    nvars = doc.get("nvars")
    items = []
    for i, t in enumerate(terms):
        w = f"{where}.terms[{i}]"
        if not isinstance(t, dict) or "exponents" not in t or "coefficient" not in t:
            raise InputError(f"{w}: expected {{'exponents': [...], 'coefficient': ...}}")
        exps = t["exponents"]
        if not isinstance(exps, list) or not all(isinstance(e, int) and e >= 0 for e in exps):
            raise InputError(f"{w}.exponents: expected nonnegative integers")
        items.append((tuple(exps), _parse_rational(t["coefficient"], f"{w}.coefficient")))
    if nvars is None:
        if not items:
            raise InputError(f"{where}: 'nvars' required for the zero form")
        nvars = len(items[0][0])
    try:
        return Poly(items, nvars=nvars, ring=Ring.DUAL)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def failure_document(reason) -> dict | None:
    if reason is None:
        return None
    doc = {"code": reason.code}
    for key, value in vars(reason).items():
        doc[key] = list(value) if isinstance(value, tuple) else value
    return doc


def certificate_document(cert, pretty: bool = False) -> dict:
    hd = cert.hilbert
    doc = {
        "verdict": cert.verdict.value,
        "failure_reason": cert.failure_reason.code if cert.failure_reason else None,
        "failure_detail": failure_document(cert.failure_reason),
        "path": cert.path,
        "r": hd.r,
        "socle_degree": hd.socle_degree,
        "hilbert_function": list(hd.hf),
        "h_vector": list(hd.h_vector),
        "z": qs(cert.z) if cert.z is not None else None,
        "alpha": qs(cert.alpha) if cert.alpha is not None else None,
        "apolar_form": poly_document(cert.F, pretty) if cert.F is not None else None,
        "apolar_hf": list(cert.apolar_hf),
        "dual_dim": cert.dual_dim,
    }
    return doc


# subcommands

def _points(args):
    X, z_hint, name = parse_points_document(load_json(args.points))
    if getattr(args, "z", None):
        z_hint = _parse_vector(args.z.split(","), "--z")
        if len(z_hint) != X.n + 1:
            raise InputError(f"--z: expected {X.n + 1} coefficients")
    report = validate(X)
    for w in report.warnings:
        log.warning(w)
    return X, z_hint, name


def _alpha_from_args(args, X: PointSet):
    if args.alpha:
        vals = _parse_vector(args.alpha.split(","), "--alpha")
        if len(vals) != X.r:
            raise InputError(f"--alpha: expected {X.r} entries")
        if not any(vals):
            raise InputError("--alpha: all entries are zero")
        return vals
    res = alpha_kernel(X)
    if not isinstance(res, AlphaVector):
        raise InputError(f"no usable alpha ({res.code}); pass --alpha explicitly")
    return res


def cmd_check(args):
    X, z_hint, name = _points(args)
    cert = is_arithmetically_gorenstein(X, z_hint)
    doc = {"name": name, **certificate_document(cert, args.pretty)}
    return doc, cert.verdict.value


def cmd_dgo(args):
    X, _, name = _points(args)
    res = dgo_test(X)
    verdict = "gorenstein" if res.verdict else "not_gorenstein"
    doc = {
        "name": name,
        "verdict": verdict,
        "condition_failed": res.condition_failed,
        "witness": res.witness,
        "degree": res.degree,
        "detail": res.detail,
        "h_vector": list(res.hilbert.h_vector),
    }
    return doc, verdict


def cmd_hf(args):
    X, _, name = _points(args)
    if args.max_degree < 0:
        raise InputError("--max-degree must be nonnegative")
    return {"name": name, "hilbert_function": [hilbert_function(X, j) for j in range(args.max_degree + 1)]}, "ok"


def cmd_hvector(args):
    X, _, name = _points(args)
    hd = hilbert_data(X)
    return {"name": name, "r": X.r, "n": X.n, "socle_degree": hd.socle_degree,
            "hilbert_function": list(hd.hf), "h_vector": list(hd.h_vector)}, "ok"


def cmd_alphas(args):
    X, _, name = _points(args)
    hd = hilbert_data(X)
    s = hd.socle_degree
    if s < 1:
        return {"name": name, "socle_degree": s, "kernel_basis": [], "alpha": None,
                "failure_reason": None, "failure_detail": None}, "ok"
    basis = kernel(power_matrix(X, s - 1).T)
    res = alpha_kernel(X, hd)
    ok = isinstance(res, AlphaVector)
    return {
        "name": name,
        "socle_degree": s,
        "kernel_basis": [qs(v) for v in basis],
        "alpha": qs(res) if ok else None,
        "failure_reason": None if ok else res.code,
        "failure_detail": None if ok else failure_document(res),
    }, "ok" if ok else res.code


def cmd_apolar_form(args):
    X, z_hint, name = _points(args)
    alpha = _alpha_from_args(args, X)
    z = choose_regular_form(X, z_hint)
    ap = apolar_form(X, alpha, z)
    dim, ahf = dual_module_dimension(ap.form)
    return {"name": name, "z": qs(z), "alpha": qs(alpha),
            "apolar_form": poly_document(ap.form, args.pretty),
            "apolar_hf": list(ahf), "dual_dim": dim}, "ok"


def _gens(args):
    X, z_hint, name = _points(args)
    alpha = _alpha_from_args(args, X)
    z = choose_regular_form(X, z_hint)
    if args.tmax < 1:
        raise InputError("--tmax must be at least 1")
    return X, name, inverse_system_generators(X, alpha, z, args.tmax)


def cmd_invsys(args):
    X, name, gens = _gens(args)
    return {"name": name, "z": qs(gens.z), "alpha": qs(gens.alpha),
            "socle_degree": gens.socle_degree,
            "generators": [{"t": t, "degree": g.degree, "form": poly_document(g, args.pretty)}
                           for t, g in enumerate(gens.gens, start=1)]}, "ok"


def cmd_verify_gadm(args):
    X, name, gens = _gens(args)
    t = args.t if args.t is not None else gens.socle_degree
    if args.tmax < t + 1:
        raise InputError(f"--tmax must be at least {t + 1}")
    res = verify_g_admissible(X, gens, t)
    word = "admissible" if res.verdict else "not_admissible"
    return {
        "name": name,
        "verdict": word,
        "ladder_ok": res.ladder_ok,
        "t": res.t,
        "relation": res.relation,
        "detail": res.detail,
        "by_degree": [{"degree": c.degree, "dim_chain": c.dim_chain, "dim_dual": c.dim_dual,
                       "relation": c.relation} for c in res.comparisons],
    }, word


def cmd_reduce_check(args):
    X, z_hint, name = _points(args)
    F = parse_poly_document(load_json(args.form))
    if F.nvars != X.n + 1:
        raise InputError(f"form has {F.nvars} variables, points live in {X.n + 1}")
    cert = is_arithmetically_gorenstein(X, z_hint)
    z = choose_regular_form(X, z_hint)
    res = is_artinian_reduction(F, X, z, x_is_gorenstein=cert.is_gorenstein)
    word = "liftable" if res.liftable else "not_liftable"
    return {
        "name": name,
        "verdict": word,
        "x_verdict": cert.verdict.value,
        "z": qs(z),
        "alpha": qs(res.alpha) if res.alpha is not None else None,
        "obstruction": res.obstruction,
        "forced_zero": list(res.forced_zero),
        "solution_dimension": res.solution_dimension,
        "meaning": res.meaning,
    }, word


def cmd_locus_equations(args):
    X, _, name = _points(args)
    problem = LocusProblem(X, args.unknowns, args.s)
    eqs = minor_equations(problem)
    return {
        "name": name,
        "target_r": problem.target_r,
        "target_s": problem.target_s,
        "variables": eqs.variable_names,
        "total_minors": eqs.total_minors,
        "zero_minors": eqs.zero_minors,
        "note": eqs.note,
        "equations": [poly_document(e, args.pretty, eqs.variable_names) for e in eqs.equations],
    }, "ok"


def cmd_complete(args):
    X, z_hint, name = _points(args)
    problem = LocusProblem(X, args.unknowns, args.s)
    res = complete_to_gorenstein(problem, args.trials, args.seed, args.range, z_hint,
                                 workers=_threads())
    word = "found" if res.found else "none"
    return {
        "name": name,
        "verdict": word,
        "trials": res.trials,
        "seed": res.seed,
        "rejections": dict(sorted(res.rejections.items())),
        "found": [{"points": points_document(Y)["points"],
                   "alpha": qs(cert.alpha),
                   "h_vector": list(cert.hilbert.h_vector)} for Y, cert in res.found],
    }, word


def cmd_waring(args):
    try:
        w = waring_data(args.s, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    word = "nonliftable" if w.nonliftable else "undecided"
    return {"s": w.j, "n": w.n, "G": w.G, "rho": w.rho, "nonliftable": w.nonliftable}, word


def cmd_n0_table(args):
    if args.smax < 3:
        raise InputError("--smax must be at least 3")
    return {"table": [{"s": s, "n0": n} for s, n in n0_table(range(3, args.smax + 1))]}, "ok"


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"{THREADS_ENV}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="print only the verdict word")
    common.add_argument("--pretty", action="store_true", help="add human-readable polynomial strings")

    pts = argparse.ArgumentParser(add_help=False, parents=[common])
    pts.add_argument("points", help="points document (JSON), or - for stdin")
    pts.add_argument("--z", help="comma-separated regular linear form, overrides z_hint")

    alpha = argparse.ArgumentParser(add_help=False)
    alpha.add_argument("--alpha", help="comma-separated relation coefficients (default: computed)")

    p = argparse.ArgumentParser(prog="gorpoints", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, parents, help_):
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, [pts], "full Gorenstein certificate")
    add("dgo", cmd_dgo, [pts], "Hilbert-function oracle verdict and witness")
    add("hf", cmd_hf, [pts], "Hilbert function values").add_argument(
        "--max-degree", type=int, required=True)
    add("hvector", cmd_hvector, [pts], "h-vector and socle degree")
    add("alphas", cmd_alphas, [pts], "relation among the L_i^(s-1)")
    add("apolar-form", cmd_apolar_form, [pts, alpha], "apolar form F and its dual dimension")
    add("invsys", cmd_invsys, [pts, alpha], "inverse system generators F_1..F_T").add_argument(
        "--tmax", type=int, required=True)
    sp = add("verify-gadm", cmd_verify_gadm, [pts, alpha], "check admissibility of the generators")
    sp.add_argument("--tmax", type=int, required=True)
    sp.add_argument("--t", type=int, help="chain link to compare (default: socle degree)")
    add("reduce-check", cmd_reduce_check, [pts], "is a form dual to an Artinian reduction").add_argument(
        "--form", required=True, help="form document (JSON)")
    sp = add("locus-equations", cmd_locus_equations, [pts], "minor equations for unknown points")
    sp.add_argument("--unknowns", type=int, required=True)
    sp.add_argument("--s", type=int, required=True, help="target socle degree")
    sp = add("complete", cmd_complete, [pts], "random search for Gorenstein completions")
    sp.add_argument("--unknowns", type=int, required=True)
    sp.add_argument("--s", type=int, required=True, help="target socle degree")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--range", type=int, default=5, help="bound on numerators and denominators")
    sp = add("waring", cmd_waring, [common], "Waring rank, compressed length, non-liftability")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    add("n0-table", cmd_n0_table, [common], "minimal n for non-liftability").add_argument(
        "--smax", type=int, required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="gorpoints: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    start = time.perf_counter_ns()
    try:
        doc, word = args.func(args)
    except (InputError, ValueError) as exc:
        print(f"gorpoints: error: {exc}", file=sys.stderr)
        return 1
    if args.quiet:
        print(word)
        return 0
    doc = {"command": args.command, **doc,
           "timings": {"total_us": (time.perf_counter_ns() - start) // 1000}}
    json.dump(doc, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")
    return 0
