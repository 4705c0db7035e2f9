"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
Default tolerance can be set through the MESQ_TOL environment variable
or a key=value config file passed with --config.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import hopf, numeric, qexp, verify
from .mzv import MzvElem, NumericConfig
from .regularize import reg_decompose, rho_apply, zeta_reg
from .words import FreePoly, parse_word, word_str


class UsageError(Exception):
    pass


def _parse_complex(s: str) -> complex:
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number: {s!r}")


def _load_config(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {line!r}")
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def _poly_json(p: FreePoly):
    return [{"word": word_str(w), "coeff": f"{c.numerator}/{c.denominator}"}
            for w, c in p.items()]


def _tpoly_json(tp, coeff_json):
    return [{"T_power": j, "coeff": coeff_json(c)}
            for j, c in enumerate(tp.coeffs)]


def _emit(args, payload, text):
    if args.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True)
    else:
        out = text
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _ctx_from(args) -> numeric.EvalContext:
    return numeric.EvalContext(
        tau=_parse_complex(args.tau),
        N=args.N, M=args.M,
        tolerance=args.tol,
        T_value=_parse_complex(args.T),
        adaptive=not args.no_extrapolate,
    )


def _ctx_json(ctx: numeric.EvalContext):
    return {"tau": str(complex(ctx.tau)), "N": ctx.N, "M": ctx.M,
            "tolerance": ctx.tolerance, "T_value": str(complex(ctx.T_value)),
            "adaptive": ctx.adaptive}


# ---------------------------------------------------------------------------
# commands


def cmd_product(args):
    w, v = parse_word(args.words[0]), parse_word(args.words[1])
    if type(w) is not type(v):
        raise UsageError("both words must be in the same alphabet")
    if isinstance(w, str):
        p = hopf.shuffle_xy(w, v)
    else:
        p = hopf.product_z(FreePoly.term(w), FreePoly.term(v), args.mode)
    _emit(args, {"command": "product", "mode": args.mode,
                 "terms": _poly_json(p)}, str(p))
    return 0


def cmd_coproduct(args):
    w = parse_word(args.word)
    parts = hopf.coproduct(w)
    text = " + ".join(f"({word_str(u)}) (x) ({word_str(v)})" for u, v in parts)
    _emit(args, {"command": "coproduct",
                 "terms": [[word_str(u), word_str(v)] for u, v in parts]}, text)
    return 0


def cmd_antipode(args):
    w = parse_word(args.word)
    rule = hopf.TRIVIAL if (isinstance(w, str) or args.rule == "trivial") \
        else hopf.STUFFLE
    p = hopf.antipode_word(w, rule)
    _emit(args, {"command": "antipode", "rule": rule.name,
                 "terms": _poly_json(p)}, str(p))
    return 0


def cmd_reg(args):
    w = parse_word(args.word)
    if isinstance(w, str):
        raise UsageError("reg expects an index word")
    tp = reg_decompose(w, args.mode)
    _emit(args, {"command": "reg", "mode": args.mode,
                 "coeffs": _tpoly_json(tp, _poly_json)}, str(tp))
    return 0


def cmd_zeta_reg(args):
    w = parse_word(args.word)
    if isinstance(w, str):
        raise UsageError("zeta-reg expects an index word")
    tp = zeta_reg(w, args.mode)
    _emit(args, {"command": "zeta-reg", "mode": args.mode,
                 "coeffs": _tpoly_json(tp, lambda c: c.to_json())}, str(tp))
    return 0


def cmd_rho(args):
    w = parse_word(args.word)
    if isinstance(w, str):
        raise UsageError("rho expects an index word")
    tp = rho_apply(zeta_reg(w, "stuffle"))
    _emit(args, {"command": "rho", "input": "zeta-reg stuffle",
                 "coeffs": _tpoly_json(tp, lambda c: c.to_json())}, str(tp))
    return 0


def cmd_fourier(args):
    w = parse_word(args.word)
    if isinstance(w, str):
        raise UsageError("fourier expects an index word")
    fe = qexp.fourier_expansion(w)
    payload = {"command": "fourier", "index": list(w), "expansion": fe.to_json()}
    _emit(args, payload, str(fe))
    return 0


def cmd_gstar(args):
    w = parse_word(args.word)
    if isinstance(w, str):
        raise UsageError("gstar expects an index word")
    terms = qexp.gstar_terms(w)
    text = " + ".join(
        (f"({c})*ghat({','.join(map(str, g))})" if c != MzvElem.one()
         else f"ghat({','.join(map(str, g))})")
        for g, c in sorted(terms.items()))
    _emit(args, {"command": "gstar", "index": list(w),
                 "terms": [{"ghat": list(g), "coeff": c.to_json()}
                           for g, c in sorted(terms.items())]}, text)
    return 0


def cmd_eval(args):
    w = parse_word(args.word)
    if isinstance(w, str):
        raise UsageError("eval expects an index word")
    ctx = _ctx_from(args)
    cfg = NumericConfig(tolerance=ctx.tolerance)
    x = _parse_complex(args.x)
    obj = args.object
    if obj == "zeta":
        val = MzvElem.zeta(w).eval(cfg) if (not w or w[0] >= 2) else None
        if val is None:
            raise UsageError("zeta needs an admissible index (use zeta-star)")
        err = 1e-13
    elif obj == "hurwitz":
        val = numeric.hurwitz_trunc(w, x, ctx.N)
        err = 0.0
    elif obj == "zeta-star":
        val = numeric.zeta_star(w, x)
        err = ctx.tolerance
    elif obj == "multitangent":
        val = (numeric.multitangent_value(w, x, N=ctx.N) if ctx.adaptive
               else numeric.multitangent_trunc(w, x, ctx.N))
        err = ctx.tolerance
    elif obj == "psi-star":
        val = numeric.psi_star(w, x)
        err = ctx.tolerance
    elif obj == "mes":
        val = numeric.mes_value(w, ctx)
        err = ctx.tolerance
    elif obj == "mes-trunc":
        val = numeric.mes_trunc(w, ctx.tau, ctx.M, ctx.N)
        err = 0.0
    elif obj == "gstar":
        val = numeric.gstar_numeric(w, ctx)
        err = ctx.tolerance
    elif obj == "mes-star":
        val = numeric.mes_star(w, ctx)
        err = ctx.tolerance
    elif obj == "fourier":
        fe = qexp.fourier_expansion(w)
        val = numeric.qseries_eval(fe.q_series(args.nmax), ctx.tau, cfg)
        err = ctx.tolerance
    else:
        raise UsageError(f"unknown object: {obj!r}")
    payload = {"command": "eval", "object": obj, "word": word_str(w),
               "value_re": val.real, "value_im": val.imag,
               "error_estimate": err, "context": _ctx_json(ctx)}
    _emit(args, payload, f"{obj}({word_str(w)}) = {val}  [context {_ctx_json(ctx)}]")
    return 0


def cmd_verify(args):
    kwargs = {"max_weight": args.max_weight, "tolerance": args.suite_tol,
              "seed": args.seed}
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    rows = []
    for name in names:
        try:
            rows.extend(verify.run_suite(name, **kwargs))
        except KeyError as ex:
            raise UsageError(str(ex))
    ok = all(r.passed for r in rows)
    text = "\n".join(r.row() for r in rows)
    payload = {"command": "verify", "passed": ok,
               "checks": [{"suite": r.suite, "name": r.name,
                           "deviation": r.deviation, "threshold": r.threshold,
                           "passed": r.passed} for r in rows]}
    _emit(args, payload, text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mesq",
        description="quasi-shuffle algebras, multiple zeta values, and "
                    "multiple Eisenstein series")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--output", help="write the report to a file")
    ap.add_argument("--config", help="key=value config file")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="stuffle/shuffle product of two words")
    p.add_argument("--mode", choices=["stuffle", "shuffle"], default="stuffle")
    p.add_argument("words", nargs=2)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", help="deconcatenation coproduct")
    p.add_argument("word")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", help="Hopf antipode of a word")
    p.add_argument("--rule", choices=["stuffle", "trivial"], default="stuffle")
    p.add_argument("word")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("reg", help="T-polynomial decomposition of an H^1 word")
    p.add_argument("--mode", choices=["stuffle", "shuffle"], default="stuffle")
    p.add_argument("word")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("zeta-reg", help="regularized multiple zeta value")
    p.add_argument("--mode", choices=["stuffle", "shuffle"], default="stuffle")
    p.add_argument("word")
    p.set_defaults(func=cmd_zeta_reg)

    p = sub.add_parser("rho", help="apply rho to the stuffle-regularized zeta")
    p.add_argument("word")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("fourier", help="Fourier expansion of a multiple "
                                       "Eisenstein series (H^2 index)")
    p.add_argument("word")
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("gstar", help="symbolic ghat* in terms of ghat (H^2)")
    p.add_argument("word")
    p.set_defaults(func=cmd_gstar)

    p = sub.add_parser("eval", help="numeric evaluation")
    p.add_argument("object", choices=[
        "zeta", "hurwitz", "zeta-star", "multitangent", "psi-star",
        "mes", "mes-trunc", "gstar", "mes-star", "fourier"])
    p.add_argument("word")
    p.add_argument("--tau", default="1j")
    p.add_argument("--x", default="0j")
    p.add_argument("--N", type=int, default=10 ** 4)
    p.add_argument("--M", type=int, default=40)
    p.add_argument("--T", default="0")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--no-extrapolate", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--tol", dest="suite_tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        cfg = _load_config(args.config) if args.config else {}
        if getattr(args, "tol", None) is None and hasattr(args, "tol"):
            env = os.environ.get("MESQ_TOL") or cfg.get("tolerance")
            args.tol = float(env) if env else 1e-8
        return args.func(args)
    except UsageError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except ArithmeticError as ex:
        print(f"numeric failure: {ex}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
