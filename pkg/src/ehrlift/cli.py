"""Command-line front end.

Problem specs are JSON files::

    {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]],
     "weights": [{"kind": "linear", "coeffs": [1, 1]}],
     "options": {"config": "vertices", "bound": 2},
     "id": "square"}

Rationals may be written as "p/q" strings.  Exit status: 0 success,
1 failed check, 2 bad input (parse errors report line and column).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .algebra import specialize, truncate
from .errors import CheckFailed, EhrliftError, InputError
from .lift import cone_over, construct_H_Pw, hilbert_basis, lift_q, lift_r
from .linalg import as_rat
from .polytope import Polytope, integrate_polynomial
from .series import (
    interior_q_series,
    q_weighted_series,
    r_weighted_series,
    reciprocity_check_q,
    s_reciprocity_check,
    s_series_exppoly,
    s_weighted_series,
)
from .triangulation import all_triangulations, configuration, triangulate
from .verify import (
    CheckResult,
    compatible_triangulation_search,
    count_q,
    count_r,
    count_s,
    count_weighted,
    ehrhart_polynomial,
    hilbert_bound,
    interpolate,
    render_report,
    run_battery,
    series_from_poly,
    verify_non_noetherian_witness,
)
from .weights import (
    ExpPolyWeight,
    LinearForm,
    MonomialWeight,
    PolynomialWeight,
    WeightSystem,
)

COMMANDS = ("count", "poly", "series", "lift", "hilbert", "triangulate",
            "reciprocity", "hstar", "verify", "integrate")


# --------------------------------------------------------------------------
# spec parsing
# --------------------------------------------------------------------------


class Spec:
    def __init__(self, polytope: Polytope, weights: list, options: dict, name: str):
        self.polytope = polytope
        self.weights = weights
        self.options = options
        self.name = name


def _parse_weight(desc, dim: int, where: str):
    if not isinstance(desc, dict) or "kind" not in desc:
        raise InputError(f"{where}: weight must be an object with a 'kind'")
    kind = desc["kind"]
    if kind == "linear":
        w = LinearForm(desc["coeffs"])
    elif kind == "monomial":
        w = MonomialWeight(desc["exponents"])
    elif kind == "polynomial":
        terms = []
        for t in desc["terms"]:
            if isinstance(t, dict):
                terms.append((t["coeff"], t["exponents"]))
            else:
                c, e = t
                terms.append((c, e))
        w = PolynomialWeight(terms, dim=dim)
    elif kind == "exppoly":
        factors = []
        for fac in desc["factors"]:
            row = []
            for term in fac:
                if isinstance(term, dict):
                    row.append((term["poly"], term["base"]))
                else:
                    row.append((term[0], term[1]))
            factors.append(row)
        w = ExpPolyWeight(factors, dim=dim)
    else:
        raise InputError(f"{where}: unknown weight kind {kind!r}")
    if w.dim != dim:
        raise InputError(f"{where}: weight has dimension {w.dim}, polytope has {dim}")
    return w


def load_spec(path: str) -> Spec:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    name = "stdin" if path == "-" else os.path.splitext(os.path.basename(path))[0]
    return spec_from_dict(data, name)


def spec_from_dict(data, name: str = "spec") -> Spec:
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError(f"{name}: expected an object with 'vertices'")
    try:
        verts = [tuple(as_rat(c) for c in v) for v in data["vertices"]]
        if not verts:
            raise InputError(f"{name}: no vertices")
        P = Polytope(verts)
        weights = [_parse_weight(w, P.ambient_dim, f"{name}: weights[{i}]")
                   for i, w in enumerate(data.get("weights", []))]
    except (KeyError, TypeError) as exc:
        raise InputError(f"{name}: malformed spec ({exc!s})") from None
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise InputError(f"{name}: 'options' must be an object")
    ident = data.get("id", name)
    if not isinstance(ident, str) or not ident or any(c.isspace() for c in ident):
        raise InputError(f"{name}: 'id' must be a non-empty string without spaces")
    return Spec(P, weights, options, ident)


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _selected(spec: Spec, args) -> list:
    if args.weights is None:
        return list(spec.weights)
    out = []
    for tok in args.weights.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            i = int(tok)
        except ValueError:
            raise InputError(f"bad weight index {tok!r}") from None
        if not 1 <= i <= len(spec.weights):
            raise InputError(f"weight index {i} out of range 1..{len(spec.weights)}")
        out.append(spec.weights[i - 1])
    return out


def _system(spec: Spec, args) -> WeightSystem:
    return WeightSystem(_selected(spec, args), dim=spec.polytope.ambient_dim)


def _product_weight(spec: Spec, args):
    ws = _selected(spec, args)
    if len(ws) == 1 and isinstance(ws[0], ExpPolyWeight):
        return ws[0]
    if any(isinstance(w, ExpPolyWeight) for w in ws):
        raise InputError("an exp-poly weight cannot be combined with others")
    return WeightSystem(ws, dim=spec.polytope.ambient_dim).product()


def _target(spec: Spec, args) -> Polytope:
    lift = getattr(args, "lift", "none")
    if lift == "none":
        return spec.polytope
    W = _system(spec, args)
    return lift_q(spec.polytope, W) if lift == "q" else lift_r(spec.polytope, W)


def _fmt(v) -> str:
    return str(Fraction(v)) if not isinstance(v, int) else str(v)


def _vec(v) -> str:
    return "(" + ",".join(_fmt(c) for c in v) + ")"


def _poly_specialize(p, set_t: bool, set_q: bool):
    vals = {}
    for name in p.vars:
        if (set_t and name.startswith("t")) or (set_q and name.startswith("q")):
            vals[name] = 1
    return p.evaluate(vals).drop(vals) if vals else p


def _series_specialize(F, set_t: bool, set_q: bool):
    names = []
    if set_t:
        names += F.vars.t_names()
    if set_q:
        names += F.vars.q_names()
    return specialize(F, names).reduced() if names else F


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_count(spec: Spec, args, out):
    P = spec.polytope
    n = args.n
    if args.kind == "plain":
        out.append(str(P.count(n, interior=args.interior)))
    elif args.kind == "s":
        f = _product_weight(spec, args)
        if args.interior:
            out.append(count_s(P, f, n, interior=True).total().__str__())
        else:
            out.append(_fmt(count_weighted(P, f, n)))
    elif args.kind == "q":
        out.append(_poly_specialize(count_q(P, _system(spec, args), n, interior=args.interior),
                                    args.set_t == 1, args.set_q == 1).render())
    else:
        if args.interior:
            raise InputError("--interior is not available for r-counts")
        out.append(_poly_specialize(count_r(P, _system(spec, args), n),
                                    args.set_t == 1, args.set_q == 1).render())
    return 0


def cmd_poly(spec: Spec, args, out):
    P = _target(spec, args)
    f = 1 if args.lift != "none" else _product_weight(spec, args)
    if isinstance(f, ExpPolyWeight):
        raise InputError("poly needs a polynomial weight")
    out.append(interpolate(P, f).render())
    return 0


def cmd_series(spec: Spec, args, out):
    P = spec.polytope
    if args.kind == "q":
        W = _system(spec, args)
        F = interior_q_series(P, W) if args.interior else q_weighted_series(P, W)
    elif args.kind == "r":
        if args.interior:
            raise InputError("--interior is only available for q- and s-series")
        F = r_weighted_series(P, _system(spec, args))
    else:
        ws = _selected(spec, args)
        if len(ws) != 1:
            raise InputError("the s-series takes exactly one weight (use --weights)")
        w = ws[0]
        if isinstance(w, ExpPolyWeight):
            F = s_series_exppoly(P, w, interior=args.interior)
        else:
            if args.interior:
                raise InputError("interior s-series need an exp-poly weight")
            F = s_weighted_series(P, WeightSystem([w]))
    F = _series_specialize(F, args.set_t == 1, args.set_q == 1)
    if args.order is not None:
        for k, c in enumerate(truncate(F, "x", args.order)):
            out.append(f"x^{k}: {c.render()}")
    else:
        out.append(F.render())
    return 0


def cmd_lift(spec: Spec, args, out):
    W = _system(spec, args)
    L = lift_q(spec.polytope, W) if args.type == "q" else lift_r(spec.polytope, W)
    out.append(f"dim {L.dim}")
    for v in sorted(L.vertices):
        out.append(_vec(v))
    return 0


def cmd_hilbert(spec: Spec, args, out):
    P = _target(spec, args)
    bound = args.bound if args.bound is not None else spec.options.get("bound")
    H = hilbert_basis(cone_over(P), bound if bound is not None else hilbert_bound(P))
    for h in H:
        out.append(_vec(h))
    out.append(f"size {len(H)} bound {H.bound} certified {str(H.certified).lower()}")
    if args.check_lift:
        W = _system(spec, args)
        base = hilbert_basis(cone_over(spec.polytope), hilbert_bound(spec.polytope))
        ok = H == construct_H_Pw(base, W) if args.lift == "r" else True
        res = CheckResult("hilbert_lift", spec.name, "spec", ok, f"size={len(H)}")
        out.append(res.line())
        return 0 if ok else 1
    return 0


def cmd_triangulate(spec: Spec, args, out):
    P = spec.polytope
    config = args.config or spec.options.get("config", "vertices")
    if args.compatible:
        T, res = compatible_triangulation_search(P, _system(spec, args), config, spec.name, "spec")
        if T is not None:
            for verts in T.vertex_sets():
                out.append(" ".join(_vec(v) for v in verts))
        out.append(res.line())
        return 0 if res.passed else 1
    if args.all:
        count = 0
        for T in all_triangulations(configuration(P, config), P.frame):
            count += 1
            out.append(f"triangulation {count}")
            for verts in T.vertex_sets():
                out.append(" ".join(_vec(v) for v in verts))
        out.append(f"total {count}")
        return 0
    T = triangulate(P, config)
    for verts in T.vertex_sets():
        out.append(" ".join(_vec(v) for v in verts))
    out.append(f"volume {_fmt(T.total_volume())}")
    return 0


def cmd_reciprocity(spec: Spec, args, out):
    P = spec.polytope
    if args.kind == "q":
        ok = reciprocity_check_q(P, _system(spec, args))
    else:
        ws = _selected(spec, args)
        if len(ws) != 1 or not isinstance(ws[0], ExpPolyWeight):
            raise InputError("s-reciprocity takes exactly one exp-poly weight")
        ok = s_reciprocity_check(P, ws[0])
    res = CheckResult(f"reciprocity_{args.kind}", spec.name, "spec", ok)
    out.append(res.line())
    return 0 if ok else 1


def cmd_hstar(spec: Spec, args, out):
    P = _target(spec, args)
    out.append(series_from_poly(ehrhart_polynomial(P), P.dim + 1).render())
    return 0


def cmd_verify(spec: Spec | None, args, out):
    if spec is None:
        results = run_battery()
    else:
        W = WeightSystem(_selected(spec, args), dim=spec.polytope.ambient_dim)
        results = run_battery(spec.polytope, W, spec.name, "spec")
    if args.witness:
        results.append(verify_non_noetherian_witness(args.witness))
    out.append(render_report(results).rstrip("\n"))
    return 0 if all(r.passed for r in results) else 1


def cmd_integrate(spec: Spec, args, out):
    P = spec.polytope
    if args.monomial is not None:
        try:
            b = [int(c) for c in args.monomial.split(",")]
        except ValueError:
            raise InputError(f"bad exponent list {args.monomial!r}") from None
        terms = [(1, b)]
    else:
        f = _product_weight(spec, args)
        if isinstance(f, ExpPolyWeight):
            raise InputError("integrate needs a polynomial weight")
        terms = f.items()
    out.append(_fmt(integrate_polynomial(P, terms)))
    return 0


HANDLERS = {
    "count": cmd_count,
    "poly": cmd_poly,
    "series": cmd_series,
    "lift": cmd_lift,
    "hilbert": cmd_hilbert,
    "triangulate": cmd_triangulate,
    "reciprocity": cmd_reciprocity,
    "hstar": cmd_hstar,
    "verify": cmd_verify,
    "integrate": cmd_integrate,
}


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrlift",
        description="Weighted Ehrhart functions and series of lattice polytopes.",
        epilog="Environment: EHRLIFT_THREADS is an optional parallelism hint; "
               "EHRLIFT_PURE_PYTHON=1 disables the compiled kernels. "
               "Exit status: 0 success, 1 failed check, 2 input error.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help_text, spec_optional=False):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if spec_optional:
            p.add_argument("spec", nargs="?", help="JSON problem spec (omit for the built-in battery)")
        else:
            p.add_argument("spec", help="JSON problem spec, or - for stdin")
        p.add_argument("--weights", metavar="I,J,...",
                       help="1-based indices of the spec weights to use (default: all)")
        return p

    p = add("count", "weighted lattice-point count of the n-th dilate")
    p.add_argument("--kind", choices=("plain", "q", "r", "s"), default="plain",
                   help="plain count, q/r polynomial, or s-weighted sum (product of weights)")
    p.add_argument("--n", type=int, required=True, help="dilation factor (>= 0)")
    p.add_argument("--interior", action="store_true", help="count interior points instead")
    p.add_argument("--set-t", type=int, choices=(1,), help="specialize every t_i to 1")
    p.add_argument("--set-q", type=int, choices=(1,), help="specialize every q_i to 1")

    p = add("poly", "interpolated Ehrhart polynomial E^{s,f}(n), f the product of the weights")
    p.add_argument("--lift", choices=("none", "q", "r"), default="none",
                   help="use the plain Ehrhart polynomial of a lifting polytope")

    p = add("series", "rational generating series")
    p.add_argument("--kind", choices=("q", "r", "s"), default="q", help="weighting of the series")
    p.add_argument("--interior", action="store_true", help="interior series (q, or s with exp-poly weight)")
    p.add_argument("--set-t", type=int, choices=(1,), help="specialize every t_i to 1")
    p.add_argument("--set-q", type=int, choices=(1,), help="specialize every q_i to 1")
    p.add_argument("--order", type=int, help="print the x-coefficients up to this order instead")

    p = add("lift", "vertices of a weight lifting polytope")
    p.add_argument("--type", choices=("q", "r"), default="r", help="graph lift (q) or region lift (r)")

    p = add("hilbert", "Hilbert basis of the cone over the polytope")
    p.add_argument("--lift", choices=("none", "q", "r"), default="none", help="use a lifting polytope")
    p.add_argument("--bound", type=int, help="degree bound (default max(1, dim - 1))")
    p.add_argument("--check-lift", action="store_true",
                   help="compare with the basis built from the polytope's own basis")

    p = add("triangulate", "triangulations and compatible-triangulation search")
    p.add_argument("--config", choices=("vertices", "all"), help="point configuration (default vertices)")
    p.add_argument("--all", action="store_true", help="enumerate every triangulation")
    p.add_argument("--compatible", action="store_true", help="search for a weight-compatible triangulation")

    p = add("reciprocity", "check a reciprocity law")
    p.add_argument("--kind", choices=("q", "s"), default="q", help="q-weighted or exp-poly s-weighted")

    p = add("hstar", "h*-polynomial over (1-x)^(dim+1)")
    p.add_argument("--lift", choices=("none", "q", "r"), default="none", help="use a lifting polytope")

    p = add("verify", "run the verification battery", spec_optional=True)
    p.add_argument("--witness", type=int, metavar="K", help="also check the non-Noetherian witness up to K")

    p = add("integrate", "exact integral over the polytope")
    p.add_argument("--monomial", metavar="B1,B2,...", help="integrate x^b instead of the weight product")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    threads = os.environ.get("EHRLIFT_THREADS")
    if threads is not None and not threads.strip().isdigit():
        print("error: EHRLIFT_THREADS must be a positive integer", file=stderr)
        return 2
    out: list[str] = []
    try:
        if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
            raise InputError("--n must be nonnegative")
        spec = load_spec(args.spec) if args.spec is not None else None
        code = HANDLERS[args.command](spec, args, out)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=stderr)
        return 1
    except EhrliftError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    for line in out:
        stdout.write(line + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
