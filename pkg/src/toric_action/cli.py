"""Command-line entry point.

Exit codes: 0 success, 2 class outside the Kahler cone, 3 a certificate or
fixture check failed, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import certify, cohomology, optimize, regression
from .errors import ConeViolation, NonPositiveSquare, NotVerified
from .exact import PiScalar
from .polytope import DP2, DP3, KahlerParams, SurfaceKind, build_polygon

EXIT_OK, EXIT_CONE, EXIT_NOT_VERIFIED, EXIT_USAGE = 0, 2, 3, 64

GRAMMAR = """\
usage: toric-action [--surface {dp2,dp3}] [--format {json,csv,text}] [--seed INT] [--out PATH] COMMAND ...

commands:
  verify   --lemma {up1|up2|pos2|pos3|all} [--emit-certificate PATH]
  derive   --what {V|F1|F2|A|B|C|calB|a} [--fixture PATH]
  eval     --class a,b,g[,d] --what LIST [--dump-polygon]
  minimize [--tol RAT]
  sweep    --range VAR[,VAR]=lo:hi:step ... --what LIST
  classes  --k INT
  path     --omega b,g --steps INT
  regress  [--fixtures DIR]

--class takes (beta,gamma[,delta]) on dp2 and (alpha,beta,gamma[,delta]) on dp3;
delta defaults to 1.  Rationals may be written 3/7, 0.25 or 1e-8; a list that
starts with a minus sign needs the = form, e.g. --class=-1,2.
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt_float(x) -> str:
    return f"{float(x):.15g}"


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _rat_list(text: str) -> list[Fraction]:
    return [_rat(t) for t in text.split(",") if t.strip()]


def _exact(v) -> dict:
    if isinstance(v, PiScalar):
        return {"exact": str(v.coeff), "pi_power": v.pi_power, "float": fmt_float(v)}
    if isinstance(v, bool):
        return {"exact": v}
    return {"exact": str(v), "pi_power": 0, "float": fmt_float(v)}


def _exact_text(v) -> str:
    if not isinstance(v, PiScalar) or v.pi_power == 0:
        return str(getattr(v, "coeff", v))
    return f"{v.coeff}*pi" if v.pi_power == 1 else f"{v.coeff}*pi^{v.pi_power}"


def _wants_color(stream) -> bool:
    return os.environ.get("NO_COLOR") is None and getattr(stream, "isatty", lambda: False)()


def _color(text: str, ok: bool, use: bool) -> str:
    if not use:
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _params_from_values(kind: SurfaceKind, vals: list[Fraction]) -> KahlerParams:
    if kind is DP2:
        if len(vals) not in (2, 3):
            raise UsageError("dp2 --class needs beta,gamma[,delta]")
        return KahlerParams.dp2(*vals)
    if len(vals) not in (3, 4):
        raise UsageError("dp3 --class needs alpha,beta,gamma[,delta]")
    return KahlerParams.dp3(*vals)


def _params_json(p: KahlerParams) -> dict:
    return {k: str(v) for k, v in zip(("alpha", "beta", "gamma", "delta"), p.as_tuple())}


# --------------------------------------------------------------------------
# subcommands; each writes to ``out`` and returns an exit code
# --------------------------------------------------------------------------

_LEMMAS = {"up1": DP2, "up2": DP3, "pos2": DP2, "pos3": DP3}


def cmd_verify(args, out) -> int:
    lemmas = list(_LEMMAS) if args.lemma == "all" else [args.lemma]
    if args.surface_given:
        if args.lemma != "all" and _LEMMAS[args.lemma] is not args.surface:
            raise UsageError(f"lemma {args.lemma} concerns {_LEMMAS[args.lemma].value}, not {args.surface.value}")
        lemmas = [lem for lem in lemmas if _LEMMAS[lem] is args.surface]
    records, emitted, ok_all = {}, {}, True
    for lem in lemmas:
        kind = _LEMMAS[lem]
        if lem.startswith("up"):
            cert = certify.verify_B_bound(kind)
            ok = cert.verified
            rec = {
                "lemma": lem, "surface": kind.value, "verified": ok,
                "statement": cert.statement,
                "residual_terms": len(cert.residual),
                "residual_min_coefficient": str(cert.residual.min_coefficient()),
                "details": {k: v for k, v in cert.details.items()},
            }
            emitted[lem] = cert.residual.to_record()
        else:
            rep = certify.verify_scalar_positivity(kind)
            hom = certify.homogenization_check(kind)
            ok = rep.verified and hom["ok"]
            rec = {
                "lemma": lem, "surface": kind.value, "verified": ok, "statement": rep.statement,
                "vertices": len(rep.vertices),
                "degrees": sorted({tuple(v["degrees"]) for v in rep.vertices}),
                "homogenization_ok": hom["ok"],
            }
            vals = certify.vertex_values_symbolic(kind)
            emitted[lem] = [{"numerator": v.num.to_record(1), "denominator": v.den.to_record(0)} for v in vals]
        ok_all = ok_all and ok
        records[lem] = rec
    if args.emit_certificate:
        payload = emitted[lemmas[0]] if len(lemmas) == 1 else emitted
        with open(args.emit_certificate, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    if args.format == "json":
        out.write(json.dumps(list(records.values()), indent=1, default=list) + "\n")
    else:
        for rec in records.values():
            status = "VERIFIED" if rec["verified"] else "NOT VERIFIED"
            extra = (f"residual terms={rec['residual_terms']} min coefficient={rec['residual_min_coefficient']}"
                     if "residual_terms" in rec else
                     f"vertices={rec['vertices']} degrees={rec['degrees']} homogenization={rec['homogenization_ok']}")
            out.write(f"{rec['lemma']} {rec['surface']} {_color(status, rec['verified'], args.color)}  {extra}\n")
    return EXIT_OK if ok_all else EXIT_NOT_VERIFIED


def cmd_derive(args, out) -> int:
    f, pi = regression.derived_quantity(args.surface.value, args.what)
    code = EXIT_OK
    comparison = None
    if args.fixture:
        rec, stored = regression.load_fixture(args.fixture)
        same = rec.get("pi_power", 0) == pi and f == stored
        comparison = {"fixture": args.fixture, "match": same}
        if not same:
            comparison["difference"] = regression.explain_difference(f, stored)
            code = EXIT_NOT_VERIFIED
    if args.format == "json":
        rec = {"surface": args.surface.value, "quantity": args.what, "delta": "1", "pi_power": pi,
               "numerator": f.num.to_record(pi), "denominator": f.den.to_record(0)}
        if comparison is not None:
            rec["comparison"] = comparison
        out.write(json.dumps(rec, indent=1) + "\n")
    else:
        pi_txt = "" if pi == 0 else f" * pi^{pi}"
        out.write(f"{args.what} ({args.surface.value}, delta = 1){pi_txt} =\n")
        out.write(f"  ({f.num})\n  / ({f.den})\n")
        if comparison is not None:
            out.write(f"fixture {args.fixture}: {'match' if comparison['match'] else 'MISMATCH'}\n")
            if not comparison["match"]:
                out.write(json.dumps(comparison["difference"], indent=1) + "\n")
    return code


def _quantity_list(text: str) -> list[str]:
    qs = [q.strip() for q in text.split(",") if q.strip()]
    bad = [q for q in qs if q not in optimize.QUANTITIES]
    if bad or not qs:
        raise UsageError(f"unknown quantity {', '.join(bad) or '(none)'}; choose from {', '.join(optimize.QUANTITIES)}")
    return qs


def cmd_eval(args, out) -> int:
    params = _params_from_values(args.surface, _rat_list(args.class_))
    quantities = _quantity_list(args.what)
    cls = cohomology.class_from_params(args.surface, params)
    if not cohomology.is_kahler(cls):
        raise ConeViolation(f"class {cls} with parameters {_params_json(params)} is not Kahler")
    values = optimize.evaluate_quantities(args.surface, params, quantities)
    poly = build_polygon(args.surface, params) if args.dump_polygon else None
    if args.format == "json":
        rec = {"surface": args.surface.value, "params": _params_json(params), "class": str(cls),
               "values": {q: _exact(v) for q, v in values.items()}}
        if poly is not None:
            rec["polygon"] = {"vertices": [[str(x), str(y)] for x, y in poly.vertices],
                              "edges": [{"normal": list(e.normal), "length": str(e.length)} for e in poly.edges]}
        out.write(json.dumps(rec, indent=1) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["quantity", "exact", "pi_power", "float"])
        for q, v in values.items():
            e = _exact(v)
            w.writerow([q, e["exact"], e["pi_power"], e["float"]])
    else:
        for q, v in values.items():
            out.write(f"{q} = {_exact_text(v)}  ({fmt_float(v)})\n")
    if poly is not None and args.format != "json":
        out.write(poly.dump() + "\n")
    return EXIT_OK


def cmd_minimize(args, out) -> int:
    tol = _rat(args.tol)
    if tol <= 0:
        raise UsageError("--tol must be positive")
    res = optimize.minimize_calA_dp2(tol)
    rec = res.to_record()
    if args.format == "text":
        for k in ("params", "calA", "calA_float", "certified_below", "inside_Y", "eta_square", "symmetric",
                  "diagonal_critical"):
            out.write(f"{k}: {rec[k]}\n")
        if "grid" in rec:
            g = rec["grid"]
            out.write(f"grid: step {g['step']}, {g['points_inside']} points in Y, passed={g['passed']}\n")
    else:
        rec["calA_float"] = fmt_float(res.calA_star)
        out.write(json.dumps(rec, indent=1) + "\n")
    return EXIT_OK if res.certified_below is not None else EXIT_NOT_VERIFIED


def _parse_range(text: str) -> optimize.SweepRange:
    try:
        names, spec = text.split("=", 1)
        lo, hi, step = spec.split(":")
    except ValueError:
        raise UsageError(f"--range expects VAR=lo:hi:step, got {text!r}") from None
    names = tuple(n.strip() for n in names.split(","))
    step = _rat(step)
    if step <= 0:
        raise UsageError("sweep step must be positive")
    return optimize.SweepRange(names, _rat(lo), _rat(hi), step)


def _write_rows(header, rows, args, out):
    if args.format == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows], indent=1) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
        out.write("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def cmd_sweep(args, out) -> int:
    ranges = [_parse_range(r) for r in args.range]
    quantities = _quantity_list(args.what)
    try:
        rows = optimize.grid_sweep(args.surface, ranges, quantities)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = ["alpha", "beta", "gamma", "delta", "status"]
    for q in quantities:
        header += [q, f"{q}_pi_power", f"{q}_float"]
    table = []
    for row in rows:
        line = [str(x) for x in row["params"].as_tuple()] + [row["status"]]
        for q in quantities:
            if q in row["values"]:
                e = _exact(row["values"][q])
                line += [e["exact"], e["pi_power"], e["float"]]
            else:
                line += ["", "", ""]
        table.append(line)
    _write_rows(header, table, args, out)
    return EXIT_OK


def cmd_classes(args, out) -> int:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    classes = cohomology.enumerate_negative_classes(args.surface, args.k)
    if args.format == "json":
        out.write(json.dumps([[int(c) for c in cls.coefficients()] for cls in classes]) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n"] + [f"a{i}" for i in range(1, args.surface.n_blowups + 1)])
        w.writerows([[int(c) for c in cls.coefficients()] for cls in classes])
    else:
        for cls in classes:
            out.write(f"{cls}\n")
    return EXIT_OK


def cmd_path(args, out) -> int:
    vals = _rat_list(args.omega)
    if len(vals) not in (2, 3):
        raise UsageError("--omega expects beta,gamma[,delta]")
    if args.steps < 1:
        raise UsageError("--steps must be positive")
    omega = cohomology.class_from_params(DP2, KahlerParams.dp2(*vals))
    if not cohomology.is_kahler(omega):
        raise ConeViolation(f"{omega} is not a Kahler class on dp2")
    rows = optimize.path_rows(omega, args.steps)
    header = ["t", "E1_area", "calT", "calT_float", "calB", "calB_float", "smin", "smin_float", "smax", "smax_float"]
    table = []
    for r in rows:
        table.append([
            str(r["t"]), str(r["E1_area"]),
            str(r["calT"]), fmt_float(r["calT"]), str(r["calB"]), fmt_float(r["calB"]),
            _exact_text(r["smin"]), fmt_float(r["smin"]), _exact_text(r["smax"]), fmt_float(r["smax"]),
        ])
    _write_rows(header, table, args, out)
    return EXIT_OK


def cmd_regress(args, out) -> int:
    results = regression.fixture_regression(args.fixtures)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out.write(json.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
                             indent=1) + "\n")
    else:
        for r in results:
            out.write(f"{_color('PASS' if r.passed else 'FAIL', r.passed, args.color)} {r.name}\n")
            if not r.passed:
                out.write("  " + json.dumps(r.detail) + "\n")
    return EXIT_OK if ok else EXIT_NOT_VERIFIED


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's unset flag from clobbering one given before it
    common = _Parser(add_help=False)
    common.add_argument("--surface", choices=["dp2", "dp3"], default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)

    p = _Parser(prog="toric-action", parents=[common], add_help=True)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--lemma", required=True, choices=["up1", "up2", "pos2", "pos3", "all"])
    v.add_argument("--emit-certificate", default=None)

    d = sub.add_parser("derive", parents=[common])
    d.add_argument("--what", required=True, choices=["V", "F1", "F2", "A", "B", "C", "calB", "a"])
    d.add_argument("--fixture", default=None)

    e = sub.add_parser("eval", parents=[common])
    e.add_argument("--class", dest="class_", required=True)
    e.add_argument("--what", required=True)
    e.add_argument("--dump-polygon", action="store_true")

    m = sub.add_parser("minimize", parents=[common])
    m.add_argument("--tol", default="1e-8")

    s = sub.add_parser("sweep", parents=[common])
    s.add_argument("--range", action="append", required=True)
    s.add_argument("--what", required=True)

    c = sub.add_parser("classes", parents=[common])
    c.add_argument("--k", type=int, required=True)

    pa = sub.add_parser("path", parents=[common])
    pa.add_argument("--omega", required=True)
    pa.add_argument("--steps", type=int, required=True)

    r = sub.add_parser("regress", parents=[common])
    r.add_argument("--fixtures", default=None)
    return p


_HANDLERS = {
    "verify": cmd_verify, "derive": cmd_derive, "eval": cmd_eval, "minimize": cmd_minimize,
    "sweep": cmd_sweep, "classes": cmd_classes, "path": cmd_path, "regress": cmd_regress,
}
_DEFAULT_FORMAT = {"sweep": "csv", "path": "csv", "minimize": "json"}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("no command given")
        surface = getattr(args, "surface", None)
        args.surface_given = surface is not None
        args.surface = SurfaceKind.parse(surface or "dp2")
        args.format = getattr(args, "format", None) or _DEFAULT_FORMAT.get(args.command, "text")
        args.seed = getattr(args, "seed", 0)
        args.out = getattr(args, "out", None)
        args.color = args.out is None and _wants_color(stdout)
        buf = io.StringIO()
        code = _HANDLERS[args.command](args, buf)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n\n{GRAMMAR}")
        return EXIT_USAGE
    except (ConeViolation, NonPositiveSquare) as exc:
        stderr.write(f"cone violation: {exc}\n")
        return EXIT_CONE
    except NotVerified as exc:
        stderr.write(f"not verified: {exc}\n")
        return EXIT_NOT_VERIFIED
    except regression.ConfigurationError as exc:
        stderr.write(f"configuration error: {exc}\n")
        return EXIT_USAGE
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
