"""Command line: ``monadcert {certify,table,hilbert,oracle,verify}``.

Documents go to stdout (text table, canonical JSON, or CSV); diagnostics go to
stderr. Set ``MONADCERT_LOG=DEBUG`` for verbose logging.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import base_tables as bt
from .engine import (
    PullbackParams,
    c2_of,
    certify,
    h1_end_pullback,
    h_pullback,
    is_stable,
)
from .hilbert import chi_rank2, ci_hilbert
from .oracle import (
    DEFAULT_PRIME,
    build_monad,
    fspec_default,
    fspec_from_text,
    fspec_random,
    macaulay_s_p,
    monad_check,
    oracle_h0_EndE,
    oracle_h0_h1_E,
    parse_field,
)
from .verify import planted_hilbert, run_verify

log = logging.getLogger("monadcert")

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_range(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",")]


def parse_alpha(text: str) -> tuple[Fraction, ...]:
    vals = tuple(Fraction(x.strip()) for x in text.split(","))
    if len(vals) != 5:
        raise ValueError(f"alpha needs five comma-separated values, got {text!r}")
    return vals


def alpha_doc(a: bt.AlphaParams) -> dict:
    return {"values": [str(x) for x in a.alpha],
            "hankel_det": str(a.hankel_det), "invariant": str(a.invariant)}


def render(rows: list[dict], fmt: str, doc: dict | None = None) -> str:
    if fmt == "json":
        return dump_json(doc if doc is not None else rows)
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _params(args) -> PullbackParams:
    return PullbackParams(args.c1, args.beta, args.gamma)


def _field(args):
    return parse_field(args.field)


def _fspec(args, params, field):
    src = args.f
    if src == "powers":
        return fspec_default(params)
    if src == "random":
        return fspec_random(params, args.seed, field)
    path = Path(src)
    return fspec_from_text(path.read_text(encoding="utf-8"), params, field, f"file:{path.name}")


def cmd_certify(args) -> int:
    params = _params(args)
    generic = bt.alpha_validate(parse_alpha(args.alpha_generic))
    special = bt.alpha_validate(parse_alpha(args.alpha_special))
    if generic.special:
        raise ValueError("--alpha-generic must have I != 0")
    if not special.special:
        raise ValueError(f"--alpha-special must have I = 0, got I = {special.invariant}")
    cert = certify(params)
    doc = cert.to_dict()
    doc["alpha"] = {"generic": alpha_doc(generic), "special": alpha_doc(special)}
    doc["expected_dimension_source"] = "derived (Riemann-Roch, h0 End = 1)"
    if args.oracle and cert.stable:
        field = _field(args)
        f = _fspec(args, params, field)
        doc["f"] = {"description": f.description, "forms": [str(x) for x in f.forms]}
        doc["field"] = field.name
        for name, alpha in (("generic", generic), ("special", special)):
            m = build_monad(params, f.forms, alpha, field)
            rep = monad_check(m, args.samples, args.seed)
            doc["checks"].append({"name": f"monad_check_{name}", "passed": rep["passed"],
                                  "seed": args.seed, "samples": args.samples})
            simple = oracle_h0_EndE(params, f, alpha, 0, field, m)
            doc["checks"].append({"name": f"oracle_h0End_{name}", "value": simple,
                                  "passed": simple == 1})
    if args.format == "json":
        sys.stdout.write(dump_json(doc))
    else:
        flat = [{"key": k, "value": doc[k]} for k in (
            "moduli_space", "c1", "c2", "beta", "gamma", "stable", "h1_generic",
            "h1_special", "jump", "expected_dimension", "verdict")]
        if cert.reason:
            flat.append({"key": "reason", "value": cert.reason})
        flat += [{"key": f"check:{c['name']}", "value": c["passed"]} for c in doc["checks"]]
        sys.stdout.write(render(flat, args.format))
    if cert.reason:
        log.info("not certified: %s", cert.reason)
    if any(not c["passed"] for c in doc["checks"]):
        log.error("a certificate check failed")
        return EXIT_ERROR
    return EXIT_OK if cert.singular else EXIT_NEGATIVE


def cmd_table(args) -> int:
    params = _params(args)
    ts = parse_range(args.t)
    rows = []
    if args.end:
        for t in ts:
            g = h1_end_pullback(t, params, False)
            s = h1_end_pullback(t, params, True)
            rows.append({"t": t, "h1_generic": g, "h1_special": s, "jump": s - g})
        level = "End"
    else:
        if params.c1 != 0:
            raise ValueError("E-level tables need c1=0; use --end for c1=-1")
        c2 = c2_of(params)
        cols = [args.i] if args.i is not None else [0, 1, 2, 3]
        for t in ts:
            h = [h_pullback(i, t, params) for i in range(4)]
            row = {"t": t}
            row.update({f"h{i}": h[i] for i in cols})
            row["chi"] = h[0] - h[1] + h[2] - h[3]
            row["chi_rr"] = chi_rank2(t, 0, c2)
            row["serre_ok"] = (h[2] == h_pullback(1, -4 - t, params)
                               and h[3] == h_pullback(0, -4 - t, params))
            rows.append(row)
        level = "E"
    doc = {"c1": params.c1, "beta": params.beta, "gamma": params.gamma,
           "level": level, "rows": rows}
    sys.stdout.write(render(rows, args.format, doc))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    if args.degrees:
        degrees = tuple(args.degrees)
    else:
        degrees = _params(args).degrees
    h = ci_hilbert(degrees)
    rows = [{"p": p, "s_p": h[p]} for p in range(h.socle + 1)]
    doc = {"degrees": list(degrees), "socle": h.socle, "s": list(h.s), "total": h.total()}
    if args.oracle:
        from .oracle import fspec_validate, variables
        a, b, c, d = variables()
        f = fspec_validate((a ** degrees[0], b ** degrees[1], c ** degrees[2], d ** degrees[3]))
        field = _field(args)
        mac = [macaulay_s_p(f, p, field) for p in range(h.socle + 3)]
        doc["macaulay"] = mac
        doc["match"] = mac == [h[p] for p in range(h.socle + 3)]
        for r in rows:
            r["macaulay"] = mac[r["p"]]
    sys.stdout.write(render(rows, args.format, doc))
    return EXIT_OK if doc.get("match", True) else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    params = _params(args)
    field = _field(args)
    alpha = bt.alpha_validate(parse_alpha(args.alpha))
    f = _fspec(args, params, field)
    m = build_monad(params, f.forms, alpha, field)
    rows = []
    mismatch = False
    for t in parse_range(args.t):
        h0, h1 = oracle_h0_h1_E(params, f, alpha, t, field, m)
        row = {"t": t, "h0": h0, "h1": h1}
        if params.c1 == 0:
            e0, e1 = h_pullback(0, t, params), h_pullback(1, t, params)
            row.update({"engine_h0": e0, "engine_h1": e1, "match": (e0, e1) == (h0, h1)})
            mismatch |= not row["match"]
        rows.append(row)
    check = monad_check(m, args.samples, args.seed)
    doc = {
        "c1": params.c1, "beta": params.beta, "gamma": params.gamma,
        "field": field.name, "alpha": alpha_doc(alpha),
        "f": {"description": f.description, "forms": [str(x) for x in f.forms]},
        "rows": rows,
        "monad_check": {k: v for k, v in check.items() if k != "variant"},
    }
    if args.end:
        doc["h0_End"] = oracle_h0_EndE(params, f, alpha, 0, field, m)
        doc["stable"] = is_stable(params)
    sys.stdout.write(render(rows, args.format, doc))
    if not args.format == "json" and args.end:
        print(f"h0 End E(0) = {doc['h0_End']}", file=sys.stderr)
    return EXIT_NEGATIVE if mismatch or not check["passed"] else EXIT_OK


def cmd_verify(args) -> int:
    field = _field(args)
    hilbert = planted_hilbert(args.plant_sp) if args.plant_sp is not None else None
    report = run_verify(field, args.seed, args.samples, hilbert)
    if args.format == "json":
        sys.stdout.write(dump_json(report))
    else:
        rows = [{"criterion": k, **v} for k, v in report["summary"].items()]
        sys.stdout.write(render(rows, args.format))
    for cell in report["failed_cells"]:
        print(f"MISMATCH {cell}", file=sys.stderr)
    return EXIT_OK if report["mismatches"] == 0 else EXIT_NEGATIVE


def _add_params(p, need=True):
    p.add_argument("--c1", type=int, default=0, choices=(0, -1))
    p.add_argument("--beta", type=int, required=need)
    p.add_argument("--gamma", type=int, required=need)


def _add_format(p, default="table"):
    p.add_argument("--format", choices=("table", "json", "csv"), default=default)
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--csv", dest="format", action="store_const", const="csv")


def _add_oracle_opts(p):
    p.add_argument("--field", default=f"prime:{DEFAULT_PRIME}",
                   help="'rational' or 'prime:<p>' (default prime:%(default)s)")
    p.add_argument("--f", default="powers",
                   help="forms: 'powers', 'random', or a file with one polynomial per line")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=20)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monadcert", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="singularity certificate for M(c1, c2)")
    _add_params(p)
    _add_format(p)
    _add_oracle_opts(p)
    p.add_argument("--alpha-generic", default=",".join(map(str, bt.GENERIC_ALPHA)))
    p.add_argument("--alpha-special", default=",".join(map(str, bt.SPECIAL_ALPHA)))
    p.add_argument("--no-oracle", dest="oracle", action="store_false",
                   help="skip the exact monad checks")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("table", help="cohomology table by convolution")
    _add_params(p)
    _add_format(p)
    p.add_argument("--i", type=int, choices=range(4))
    p.add_argument("--end", action="store_true", help="h^1 End instead of h^i E")
    p.add_argument("--t", default="-4..4", help="twists: 'a..b' or comma list")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hilbert", help="Hilbert function of the complete intersection")
    _add_params(p, need=False)
    _add_format(p)
    p.add_argument("--degrees", type=int, nargs=4)
    p.add_argument("--oracle", action="store_true", help="compare with Macaulay ranks")
    p.add_argument("--field", default=f"prime:{DEFAULT_PRIME}")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("oracle", help="exact section counts from the monad")
    _add_params(p)
    _add_format(p)
    _add_oracle_opts(p)
    p.add_argument("--alpha", default=",".join(map(str, bt.GENERIC_ALPHA)))
    p.add_argument("--t", default="-2..6")
    p.add_argument("--end", action="store_true", help="also compute h^0 End E")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the engine/oracle cross-check grid")
    _add_format(p, default="json")
    p.add_argument("--field", default=f"prime:{DEFAULT_PRIME}")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--plant-sp", type=int, default=None, metavar="P",
                   help="fault injection: add 1 to every s_P")
    p.set_defaults(func=cmd_verify)
    return ap


def _glue_ranges(argv: list[str]) -> list[str]:
    """Let ``--t -2..6`` through; argparse would read ``-2..6`` as an option."""
    out = list(argv)
    for n in range(len(out) - 1):
        if out[n] == "--t" and out[n + 1].startswith("-"):
            out[n:n + 2] = [f"--t={out[n + 1]}", ""]
    return [a for a in out if a != ""]


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("MONADCERT_LOG", "WARNING").upper(),
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(_glue_ranges(sys.argv[1:] if argv is None else argv))
    if args.command == "hilbert" and args.degrees is None and (
            args.beta is None or args.gamma is None):
        print("error: hilbert needs --degrees or --beta/--gamma", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
