"""Command line front end: ``qmathieu <subcommand> ...``.

Exit codes: 0 success, 1 domain error (or a failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .algebra import AlgebraError, cartan, normalize, parse_free
from .centralizer import OneDimRep, SubsetS, phi_eval
from .expr import ParseError, format_scalar, parse_number, parse_scalar
from .reps import SymmetricPowerRep
from .scalars import to_json_scalar
from . import rankn as rk
from . import sl2module as m2
from . import unitarity as un

Q_ENV = "QMATHIEU_Q"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def _q_value(args, required=False):
    text = args.q if args.q is not None else os.environ.get(Q_ENV)
    if text is None:
        if required:
            raise UsageError(f"this command needs a numeric q (--q or ${Q_ENV})")
        return None
    try:
        q0 = float(parse_number(text))
    except (ParseError, TypeError) as exc:
        raise UsageError(f"cannot read q = {text!r}: {exc}")
    if not 0 < q0 < 1:
        raise UsageError(f"q must lie in (0, 1), got {q0}")
    return q0


def _mode(args):
    if args.exact and args.numeric:
        raise UsageError("--exact and --numeric are mutually exclusive")
    return "exact" if args.exact else "numeric" if args.numeric else "auto"


def _scalars(texts, args, force_numeric=False):
    """Parse scalars; returns (values, q0) with q0 None in exact mode."""
    mode = "numeric" if force_numeric else _mode(args)
    q0 = _q_value(args, required=mode == "numeric")
    if mode != "numeric":
        try:
            return [parse_scalar(t, exact=True) for t in texts], None
        except ParseError:
            if mode == "exact" or q0 is None:
                raise
    return [parse_number(t, q0) for t in texts], q0


def _int_list(text):
    if text is None or text.strip() in ("", "-", "none"):
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}")


def _split_list(text):
    return [t.strip() for t in text.split(",")] if text else []


# ---------------------------------------------------------------------------
# output


def _emit(args, payload, text=None, rows=None):
    fmt = args.format
    if fmt == "json":
        print(json.dumps(payload, indent=2, default=_json_default))
    elif fmt == "csv":
        if rows is None:
            rows = _flatten(payload)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in rows:
            w.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        print(text if text is not None else _as_text(payload))


def _json_default(x):
    try:
        return to_json_scalar(x)
    except Exception:
        return str(x)


def _flatten(payload, prefix=""):
    rows = [] if prefix else [["key", "value"]]
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                rows.extend(_flatten(v, f"{prefix}{k}."))
            else:
                rows.append([f"{prefix}{k}", v])
    elif isinstance(payload, list):
        for i, v in enumerate(payload):
            rows.extend(_flatten(v, f"{prefix}{i}.") if isinstance(v, (dict, list)) else [[f"{prefix}{i}", v]])
    return rows


def _as_text(payload, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, default=_json_default)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v, default=_json_default)}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands


def cmd_normalize(args):
    c = cartan(args.rank)
    x = normalize(args.expression, c)
    _emit(args, {"rank": args.rank, "input": args.expression, "normal_form": str(x), "terms": len(x)},
          text=str(x), rows=[["normal_form"], [str(x)]])
    return 0


def _rank_n_params(args):
    c = cartan(args.rank)
    S = _int_list(args.S)
    lam_t = _split_list(args.lam)
    mu_t = _split_list(args.mu)
    if len(lam_t) != args.rank:
        raise UsageError(f"--lambda needs {args.rank} comma separated values")
    if len(mu_t) != len(S):
        raise UsageError(f"--mu needs one value per element of S = {S}")
    vals, q0 = _scalars(lam_t + mu_t, args)
    return c, S, vals[:args.rank], dict(zip(S, vals[args.rank:])), q0


def cmd_phi_eval(args):
    c, S, lam, mu, q0 = _rank_n_params(args)
    rep = OneDimRep(SubsetS(c, S), lam, mu, q0=q0)
    x = normalize(args.expression, c)
    val = phi_eval(rep, x)
    _emit(args, {"rank": args.rank, "S": S, "input": args.expression, "normal_form": str(x),
                 "phi": to_json_scalar(val)}, text=str(to_json_scalar(val)))
    return 0


def _sl2_params(args, force_numeric=False):
    (lam, mu), q0 = _scalars([args.lam, args.mu], args, force_numeric)
    return m2.Rank1Sl2Params(lam, mu, q0=q0)


def cmd_sl2_analyze(args):
    p = _sl2_params(args)
    rep = m2.analyze(p)
    if p.q0 is None and args.q is not None:
        rep["params"]["q"] = _q_value(args)
        rep["note"] = "exact computation; q is kept as an indeterminate"
    if p.degenerate:
        rep["degenerate"] = m2.verma_quotient_report(p)
    _emit(args, rep)
    return 0


def cmd_sl2_norms(args):
    p = _sl2_params(args)
    rows = [["n", "norm_sq_E", "norm_sq_F"]]
    table = []
    for n in range(args.nmax + 1):
        a, b = un.norm_sq_E(p, n), un.norm_sq_F(p, n)
        a, b = to_json_scalar(a), to_json_scalar(b)
        rows.append([n, a, b])
        table.append({"n": n, "norm_sq_E": a, "norm_sq_F": b})
    text = "\n".join(f"{n:>4}  {a}  {b}" for n, a, b in rows[1:])
    _emit(args, {"params": m2._params_json(p), "norms": table}, text=text, rows=rows)
    return 0


def cmd_sl2_classify(args):
    p = _sl2_params(args, force_numeric=True)
    rep = un.series_report(p)
    _emit(args, rep)
    return 0


def cmd_sl2_equiv(args):
    (l1, m1, l2, m2_), q0 = _scalars([args.lam, args.mu, args.lam2, args.mu2], args)
    p1 = m2.Rank1Sl2Params(l1, m1, q0=q0)
    p2 = m2.Rank1Sl2Params(l2, m2_, q0=q0)
    n = m2.are_equivalent(p1, p2)
    out = {"params1": m2._params_json(p1), "params2": m2._params_json(p2), "equivalent": n is not None, "shift": n}
    if n is not None:
        out["casimir"] = to_json_scalar(m2.casimir_scalar(p1))
    _emit(args, out)
    return 0


def cmd_rankn_analyze(args):
    c, S, lam, mu, q0 = _rank_n_params(args)
    p = rk.RankNParams(c, S, lam, mu, q0=q0)
    rep = rk.rankn_analyze(p, samples=args.samples, seed=args.seed)
    _emit(args, rep)
    return 0


def cmd_verify(args):
    from .verify import ORDER, run_suites

    names = None if args.suite == "all" else _split_list(args.suite)
    if names:
        unknown = [n for n in names if n not in ORDER]
        if unknown:
            raise UsageError(f"unknown suite(s) {unknown}; known: {', '.join(ORDER)}")
    results = run_suites(names, seed=args.seed, jobs=args.jobs)
    payload = {"passed": all(r.passed for r in results), "suites": [r.to_json() for r in results]}
    text = "\n".join(f"{'PASS' if r.passed else 'FAIL'} {r.name:<15} {r.checks:>6} checks {r.elapsed:7.2f}s"
                     + ("" if r.passed else "  " + "; ".join(r.failures[:3])) for r in results)
    rows = [["suite", "passed", "checks", "elapsed"]] + [[r.name, r.passed, r.checks, round(r.elapsed, 3)]
                                                        for r in results]
    _emit(args, payload, text=text, rows=rows)
    return 0 if payload["passed"] else 1


def cmd_repcheck(args):
    c = cartan(args.rank)
    free = parse_free(args.expression, c)
    x = free.normalize()
    rep = SymmetricPowerRep(args.rank, args.degree, check=False)
    img_in, img_nf = rep.image(free), rep.image(x)
    ok = img_in == img_nf
    out = {"rank": args.rank, "degree": args.degree, "dimension": rep.dim, "input": args.expression,
           "normal_form": str(x), "images_agree": ok, "image_is_zero": img_nf.is_zero()}
    if args.show_matrix:
        out["matrix"] = [[format_scalar(v) for v in row] for row in img_nf.to_rows()]
    _emit(args, out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default=None)
    common.add_argument("--q", default=None, help=f"numeric q in (0, 1); default from ${Q_ENV}")
    common.add_argument("--exact", action="store_true", help="force exact scalars")
    common.add_argument("--numeric", action="store_true", help="force numeric scalars at q")

    ap = argparse.ArgumentParser(prog="qmathieu", description="Mathieu modules for U_q(sl(n+1))")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal form of an expression")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("expression")
    p.set_defaults(fn=cmd_normalize, default_format="text")

    p = sub.add_parser("phi-eval", parents=[common], help="evaluate phi^S_{lambda,mu}")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--S", default="", help="comma separated subset, e.g. 1,3")
    p.add_argument("--lambda", dest="lam", required=True, help="comma separated lambda_1..lambda_n")
    p.add_argument("--mu", default="", help="comma separated mu_j for j in S")
    p.add_argument("expression")
    p.set_defaults(fn=cmd_phi_eval, default_format="text")

    for name, fn, hlp in (("sl2-analyze", cmd_sl2_analyze, "reducibility report"),
                          ("sl2-norms", cmd_sl2_norms, "table of <E^n|E^n> and <F^n|F^n>"),
                          ("sl2-classify", cmd_sl2_classify, "unitarity and series label")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--mu", required=True)
        if name == "sl2-norms":
            p.add_argument("--nmax", type=int, default=10)
        p.set_defaults(fn=fn, default_format="csv" if name == "sl2-norms" else "json")

    p = sub.add_parser("sl2-equiv", parents=[common], help="are two rank one modules isomorphic")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda2", dest="lam2", required=True)
    p.add_argument("--mu2", required=True)
    p.set_defaults(fn=cmd_sl2_equiv, default_format="json")

    p = sub.add_parser("rankn-analyze", parents=[common], help="report on M^S_{lambda,mu}")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--S", default="")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_rankn_analyze, default_format="json")

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", default="all", help="'all' or comma separated suite names")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify, default_format="text")

    p = sub.add_parser("repcheck", parents=[common], help="compare an expression and its normal form in Sym^m")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--show-matrix", action="store_true")
    p.add_argument("expression")
    p.set_defaults(fn=cmd_repcheck, default_format="json")
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = args.default_format
    try:
        if getattr(args, "rank", 1) < 1:
            raise UsageError("--rank must be >= 1")
        return args.fn(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"qmathieu: usage error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, ParseError, ValueError, ZeroDivisionError, KeyError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc), "command": args.command}),
              file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))
