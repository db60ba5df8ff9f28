"""Command-line front end.

Verbs: deriv, dirac, euler, gamma, laplace, fischer, ck, verify, jackson,
eval.  Every verb accepts --json to emit one machine-readable line of the
form {"command", "inputs", "result", "checks"}; the result field is the
canonical expression string, which reparses to the same value.

Exit codes: 0 success (verify: everything holds), 1 verification found a
counterexample, 2 usage or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import zlib
from fractions import Fraction

from . import ck as ck_mod
from . import fischer as fischer_mod
from . import jackson as jackson_mod
from . import qops
from .cpoly import evaluate_poly
from .errors import QCliffordError, SingularSystem
from .parser import parse_poly, parse_unipoly
from .randpoly import random_poly


class InternalInvariantViolation(Exception):
    """A result the library guarantees failed to hold."""


def _emit(args, command, inputs, result, checks=()):
    if getattr(args, "json", False):
        print(json.dumps({
            "command": command,
            "inputs": inputs,
            "result": result,
            "checks": list(checks),
        }))
    else:
        print(result)
        for check in checks:
            print("%s: %s" % (check["name"], check["status"]))


def _cmd_operator(args):
    op = {
        "dirac": qops.q_dirac,
        "euler": qops.q_euler,
        "gamma": qops.q_gamma,
        "laplace": qops.q_laplace,
    }[args.verb]
    P = parse_poly(args.expr, args.m)
    result = op(P)
    _emit(args, args.verb, {"m": args.m, "expr": args.expr}, str(result))
    return 0


def _cmd_deriv(args):
    P = parse_poly(args.expr, args.m)
    result = qops.q_partial(P, args.var)
    _emit(args, "deriv", {"m": args.m, "expr": args.expr, "var": args.var}, str(result))
    return 0


def _cmd_eval(args):
    P = parse_poly(args.expr, args.m)
    q0 = Fraction(args.q0)
    inputs = {"m": args.m, "expr": args.expr, "q0": args.q0}
    if args.point is not None:
        point = [Fraction(v) for v in args.point.split(",")]
        inputs["point"] = args.point
    elif P.total_degree() <= 0:
        point = [0] * P.m
    else:
        raise QCliffordError("expression is not constant; pass --point")
    value = evaluate_poly(P, point, q0)
    _emit(args, "eval", inputs, str(value))
    return 0


def _cmd_fischer(args):
    P = parse_poly(args.expr, args.m)
    tower = fischer_mod.fischer_full(P)
    recomposed = tower.recompose() == P
    checks = [{"name": "recomposition", "status": "exact" if recomposed else "MISMATCH"}]
    if getattr(args, "json", False):
        print(json.dumps({
            "command": "fischer",
            "inputs": {"m": args.m, "expr": args.expr},
            "result": {str(s): str(comp) for s, comp in enumerate(tower.components)},
            "checks": checks,
        }))
    else:
        k = len(tower.components) - 1
        for s, comp in enumerate(tower.components):
            print("s=%d (degree %d): %s" % (s, k - s, comp))
        print("recomposition: %s" % ("exact" if recomposed else "MISMATCH"))
    if not recomposed:
        raise InternalInvariantViolation("tower does not recompose")
    return 0


def _cmd_ck(args):
    f = parse_poly(args.expr, args.m)
    F = ck_mod.ck_extend(f)
    monogenic = ck_mod.extended_dirac(F).is_zero()
    restricts = ck_mod.restrict_x0(F) == f
    checks = [
        {"name": "monogenic", "status": str(monogenic).lower()},
        {"name": "restriction", "status": str(restricts).lower()},
    ]
    _emit(args, "ck", {"m": args.m, "expr": args.expr}, str(F), checks)
    if not (monogenic and restricts):
        raise InternalInvariantViolation("extension contract failed")
    return 0


def _cmd_verify(args):
    if args.relation and not args.all:
        names = [qops.resolve_relation(args.relation)]
    else:
        names = list(qops.RELATION_NAMES)
    seed = args.seed if args.seed is not None else random.randrange(2**32)
    failures = []
    checks = []
    for name in names:
        rng = random.Random(seed ^ zlib.crc32(name.encode()))
        counterexample = None
        for _ in range(args.trials):
            m = rng.randint(1, args.m)
            P = random_poly(rng, m, args.degree)
            G = random_poly(rng, m, args.degree)
            residual = qops.check_relation(name, P, G)
            if not residual.is_zero():
                counterexample = (P, G, residual)
                break
        if counterexample is None:
            checks.append({"name": name, "status": "ok", "trials": args.trials})
        else:
            P, G, residual = counterexample
            checks.append({
                "name": name,
                "status": "fail",
                "m": P.m,
                "P": str(P),
                "second": str(G),
                "residual": str(residual),
            })
            failures.append(name)
    status = "fail" if failures else "pass"
    if getattr(args, "json", False):
        print(json.dumps({
            "command": "verify",
            "inputs": {"m": args.m, "degree": args.degree, "trials": args.trials,
                       "seed": seed, "relations": names},
            "result": status,
            "checks": checks,
        }))
    else:
        print("seed: %d" % seed)
        for check in checks:
            if check["status"] == "ok":
                print("%s: ok (%d trials)" % (check["name"], check["trials"]))
            else:
                print("%s: FAIL m=%s P=%s second=%s residual=%s" % (
                    check["name"], check["m"], check["P"], check["second"],
                    check["residual"]))
        print(status)
    return 1 if failures else 0


def _cmd_jackson(args):
    if args.jackson_verb == "deriv":
        f = parse_unipoly(args.expr)
        result = jackson_mod.jackson_derivative(f)
        _emit(args, "jackson deriv", {"expr": args.expr}, str(result))
    elif args.jackson_verb == "integrate":
        f = parse_unipoly(args.expr)
        result = jackson_mod.q_integral(f, Fraction(args.a), Fraction(args.b))
        _emit(args, "jackson integrate",
              {"expr": args.expr, "a": args.a, "b": args.b}, str(result))
    else:
        result = jackson_mod.q_exp(args.variant, args.order)
        _emit(args, "jackson exp",
              {"variant": args.variant, "order": args.order}, str(result))
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="qclifford",
        description="Exact q-deformed Clifford analysis over Q(q).",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def common(p, expr=True):
        p.add_argument("--m", type=int, default=2, help="dimension (default 2)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if expr:
            p.add_argument("expr", help="expression, e.g. 'x1^2*x2*e1'")

    for verb in ("dirac", "euler", "gamma", "laplace"):
        p = sub.add_parser(verb, help="apply the q-%s operator" % verb.capitalize())
        common(p)
        p.set_defaults(func=_cmd_operator)

    p = sub.add_parser("deriv", help="apply one q-partial derivative")
    common(p)
    p.add_argument("--var", type=int, required=True, help="variable index")
    p.set_defaults(func=_cmd_deriv)

    p = sub.add_parser("eval", help="evaluate at a rational point and q0")
    common(p)
    p.add_argument("--q0", default="1", help="rational value for q (default 1)")
    p.add_argument("--point", help="comma-separated coordinates")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("fischer", help="full Fischer decomposition tower")
    common(p)
    p.set_defaults(func=_cmd_fischer)

    p = sub.add_parser("ck", help="Cauchy-Kovalevskaya extension")
    common(p)
    p.set_defaults(func=_cmd_ck)

    p = sub.add_parser("verify", help="randomized check of operator identities")
    p.add_argument("--relation", help="relation name (see docs); default all")
    p.add_argument("--all", action="store_true", help="check every relation")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("jackson", help="one-dimensional Jackson calculus")
    jsub = p.add_subparsers(dest="jackson_verb", required=True)
    pd = jsub.add_parser("deriv")
    pd.add_argument("--json", action="store_true")
    pd.add_argument("expr", help="polynomial in t, e.g. 't^3 + t'")
    pi = jsub.add_parser("integrate")
    pi.add_argument("--a", default="0")
    pi.add_argument("--b", default="1")
    pi.add_argument("--json", action="store_true")
    pi.add_argument("expr")
    pe = jsub.add_parser("exp")
    pe.add_argument("--variant", choices=("E", "e"), default="E")
    pe.add_argument("--order", type=int, required=True,
                    help="truncation order (always explicit)")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(expr=None)
    p.set_defaults(func=_cmd_jackson)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    try:
        return args.func(args)
    except SingularSystem as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 3
    except InternalInvariantViolation as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 3
    except (QCliffordError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
