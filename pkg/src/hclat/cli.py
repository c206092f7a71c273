"""Command line front end.

Subcommands: classify, module, lattice, contract, bw, verify.  Documents
are emitted as JSON (default), CSV, or an aligned text table; every
number is an exact string, never a decimal float.  Exit status: 0 on
success, 1 on a domain error (as a machine-readable error object in JSON
mode), 2 on a usage error.

The environment variable HCLAT_SEED is reserved and currently unused;
randomized property tests take explicit seeds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import borelweil, contraction, dyadic, weightmods, zforms
from . import verify as verify_suites
from .scalars import LAURENT_RING, POLY, QQ, ZZ, Laurent

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

_VALUE_FLAGS = {
    "--window",
    "--mu",
    "--eps",
    "--lambda",
    "--q",
    "--n",
    "--m",
    "--table",
    "--suite",
    "--kind",
    "--parabolic",
    "--variant",
    "--ring",
    "--op",
    "--format",
    "--out",
}


class UsageError(Exception):
    """Invalid flag combination; reported with exit status 2."""


def _normalize_argv(argv: list) -> list:
    """Attach negative-looking values ("-3:1", "-4z") to their flags."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok in _VALUE_FLAGS
            and nxt is not None
            and nxt.startswith("-")
            and not nxt.startswith("--")
            and nxt != "-h"
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _window(text: str):
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"window must look like A:B, got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window bounds must be integers: {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"window {text!r} is empty (A > B)")
    return lo, hi


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact fraction: {text!r}")


def _laurent(text: str) -> Laurent:
    try:
        return Laurent.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _check_eps_residue(eps: Fraction, n: int) -> None:
    if not (0 <= eps < 1) or n % eps.denominator != 0:
        raise UsageError(
            f"eps must be K/N with N dividing n = {n} and 0 <= eps < 1; got {eps}"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hclat",
        description="Exact integral and fractional models of weight modules "
        "over split forms of sl2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--format", choices=("json", "csv", "table"), default="json",
            help="output document format (default json)",
        )
        p.add_argument("--out", metavar="FILE", help="write the document to FILE")

    p_classify = sub.add_parser(
        "classify", help="recover (n, m, |q|) from a presentation table"
    )
    p_classify.add_argument(
        "--table", required=True, metavar="FILE",
        help='JSON file: {"n","m","q"} or a full presentation '
        '{"weights","brackets","realization"}',
    )
    add_common(p_classify)

    p_module = sub.add_parser(
        "module", help="windowed coefficient table of a weight module"
    )
    p_module.add_argument("--kind", required=True, choices=("ind", "pro", "ps"))
    p_module.add_argument("--parabolic", choices=("q", "qp", "qpp"))
    p_module.add_argument("--n", type=int, default=1)
    p_module.add_argument("--m", type=int, default=1)
    p_module.add_argument("--lambda", dest="lam", type=int)
    p_module.add_argument("--eps", type=_fraction)
    p_module.add_argument("--mu", type=_fraction)
    p_module.add_argument("--window", required=True, type=_window)
    add_common(p_module)

    p_lattice = sub.add_parser(
        "lattice", help="2-adic exponents of the integral principal series"
    )
    p_lattice.add_argument("--variant", required=True, choices=("q", "qp", "qpp"))
    p_lattice.add_argument("--n", type=int, default=1)
    p_lattice.add_argument("--m", type=int, default=1)
    p_lattice.add_argument("--eps", type=_fraction, default=Fraction(0))
    p_lattice.add_argument("--mu", required=True, type=_fraction)
    p_lattice.add_argument("--window", required=True, type=_window)
    p_lattice.add_argument(
        "--oracle", action="store_true",
        help="re-derive every exponent with the recurrence oracle",
    )
    add_common(p_lattice)

    p_contract = sub.add_parser(
        "contract", help="coefficient table of a contraction-family module"
    )
    p_contract.add_argument("--kind", required=True, choices=("ind", "pro", "ps"))
    p_contract.add_argument("--n", type=int, default=1)
    p_contract.add_argument("--lambda", dest="lam", type=int)
    p_contract.add_argument("--eps", type=_fraction)
    p_contract.add_argument("--mu", type=_laurent, metavar="POLY")
    p_contract.add_argument("--ring", choices=("poly", "laurent"), default="poly")
    p_contract.add_argument("--window", required=True, type=_window)
    add_common(p_contract)

    p_bw = sub.add_parser(
        "bw", help="finite-rank lattices: minimal/maximal forms and witnesses"
    )
    p_bw.add_argument("--lambda", dest="lam", required=True, type=int)
    p_bw.add_argument("--n", type=int)
    p_bw.add_argument(
        "--op", required=True,
        choices=("min", "max", "dual", "hom", "certify", "counit"),
    )
    add_common(p_bw)

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    p_verify.add_argument(
        "--suite", required=True,
        choices=verify_suites.SUITES + ("all",),
    )
    add_common(p_verify)

    return parser


# -- subcommand handlers -------------------------------------------------------


def _run_classify(args) -> dict:
    with open(args.table, encoding="utf-8") as handle:
        data = json.load(handle)
    if {"n", "m", "q"} <= set(data):
        g = zforms.make_zform(int(data["n"]), int(data["m"]), Fraction(str(data["q"])))
        tables = zforms.presentation(g)
    else:
        tables = zforms.presentation_from_json(data)
    n, m, q_abs = zforms.classify(*tables)
    return {"n": n, "m": m, "abs_q": str(q_abs)}


def _realization_for_label(label: str, n: int, m: int) -> zforms.ZForm:
    if label == "q":
        return zforms.make_zform(n, m, Fraction(1, 2))
    if label == "qp":
        return zforms.make_zform(n, m, n * m)
    if m != 2 * n:
        raise UsageError(f"qpp requires m = 2n; got n = {n}, m = {m}")
    return zforms.make_zform(n, m, n)


def _run_module(args) -> dict:
    lo, hi = args.window
    if args.kind in ("ind", "pro"):
        if args.lam is None:
            raise UsageError(f"--kind {args.kind} requires --lambda")
        g = zforms.make_zform(args.n, args.m, 1)
        build = (
            weightmods.induced_module
            if args.kind == "ind"
            else weightmods.produced_module
        )
        M = build(g, args.lam, ZZ)
        heading = {"lambda": args.lam}
    else:
        if args.parabolic is None:
            raise UsageError("--kind ps requires --parabolic")
        if args.eps is None or args.mu is None:
            raise UsageError("--kind ps requires --eps and --mu")
        _check_eps_residue(args.eps, args.n)
        g = _realization_for_label(args.parabolic, args.n, args.m)
        chi = weightmods.CharacterModule(args.eps, args.mu, args.parabolic)
        M = weightmods.principal_series(g, args.parabolic, chi, QQ)
        heading = {"parabolic": args.parabolic, "eps": str(args.eps), "mu": str(args.mu)}
    rows = [
        [p, w, str(e), str(f), str(h)]
        for p, w, e, f, h in weightmods.module_rows(M, lo, hi)
    ]
    return {
        "kind": args.kind,
        "n": args.n,
        "m": args.m,
        **heading,
        "window": [lo, hi],
        "columns": ["index", "weight", "E", "F", "H"],
        "rows": rows,
    }


def _run_lattice(args) -> dict:
    _check_eps_residue(args.eps, args.n)
    report = dyadic.integral_model(
        args.variant, args.n, args.m, args.eps, args.mu, args.window
    )
    agrees = dyadic.oracle_check_report(report) if args.oracle else None
    return report.to_json(oracle_agrees=agrees)


def _run_contract(args) -> dict:
    lo, hi = args.window
    ring = POLY if args.ring == "poly" else LAURENT_RING
    if args.kind in ("ind", "pro"):
        if args.lam is None:
            raise UsageError(f"--kind {args.kind} requires --lambda")
        build = (
            contraction.contracted_induced
            if args.kind == "ind"
            else contraction.contracted_produced
        )
        M = build(args.lam, args.n, ring)
        heading = {"lambda": args.lam}
    else:
        if args.eps is None or args.mu is None:
            raise UsageError("--kind ps requires --eps and --mu")
        _check_eps_residue(args.eps, args.n)
        M = contraction.contracted_ps(args.eps, args.mu, ring, n=args.n)
        heading = {"eps": str(args.eps), "mu": str(args.mu)}
    rows = [
        [p, w, str(e), str(f), str(h)]
        for p, w, e, f, h in contraction.contraction_rows(M, lo, hi)
    ]
    doc = {
        "kind": args.kind,
        "n": args.n,
        **heading,
        "ring": ring.name,
        "window": [lo, hi],
        "columns": ["index", "weight", "e", "f", "h"],
        "rows": rows,
    }
    if M.vanishing_reason is not None:
        doc["vanishing_reason"] = M.vanishing_reason
    return doc


def _run_bw(args) -> dict:
    lam, op = args.lam, args.op
    if op == "min":
        return {"op": op, "lambda": lam, **borelweil.minimal_lattice(lam).to_json()}
    if op == "max":
        return {"op": op, "lambda": lam, **borelweil.maximal_lattice(lam).to_json()}
    if op == "dual":
        ladder = borelweil.ladder_lattice(lam, args.n or 0)
        return {"op": op, "lambda": lam, **borelweil.dual_lattice(ladder).to_json()}
    if op == "hom":
        hom = borelweil.hom_lattice(
            borelweil.minimal_lattice(lam), borelweil.maximal_lattice(lam)
        )
        return {
            "op": op,
            "lambda": lam,
            "from": "minimal",
            "to": "maximal",
            "rank": hom["rank"],
            "generator": hom["generator"],
        }
    if op == "certify":
        report = borelweil.maximality_certificate(
            borelweil.maximal_lattice(lam), (2, 3, 5), lam
        )
        return {
            "op": op,
            "lambda": lam,
            "certified": report["certified"],
            "failures": [list(pair) for pair in report["failures"]],
            "primes": report["primes"],
        }
    witness = borelweil.counit_fraction_witness(lam, args.n if args.n else 1)
    return {
        "op": op,
        "lambda": lam,
        "n": witness["n"],
        "fraction": str(witness["fraction"]),
        "weight_check": witness["weight_check"],
        "f_check": witness["f_check"],
        "h_check": witness["h_check"],
    }


def _run_verify(args) -> dict:
    return verify_suites.run_suite(args.suite)


_HANDLERS = {
    "classify": _run_classify,
    "module": _run_module,
    "lattice": _run_lattice,
    "contract": _run_contract,
    "bw": _run_bw,
    "verify": _run_verify,
}


# -- rendering -----------------------------------------------------------------


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _scalar_cell(value):
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return json.dumps(value)


def render_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "checks" in doc:
        writer.writerow(["suite", "name", "status", "detail"])
        for c in doc["checks"]:
            writer.writerow([c["suite"], c["name"], c["status"], c["detail"]])
        writer.writerow(["result", "", "pass" if doc["passed"] else "FAIL", ""])
    elif "rows" in doc:
        writer.writerow(doc["columns"])
        for row in doc["rows"]:
            writer.writerow(row)
    else:
        for key, value in doc.items():
            writer.writerow([key, _scalar_cell(value)])
    return buf.getvalue()


def render_table(doc: dict) -> str:
    if "checks" in doc:
        return verify_suites.format_report(doc) + "\n"
    if "rows" in doc:
        table = [doc["columns"]] + [[str(x) for x in row] for row in doc["rows"]]
        widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in table
        ]
        header = [
            f"{key} = {value}"
            for key, value in doc.items()
            if key not in ("rows", "columns")
        ]
        return "\n".join(["; ".join(header)] + lines) + "\n"
    lines = [f"{key}: {_scalar_cell(value)}" for key, value in doc.items()]
    return "\n".join(lines) + "\n"


_RENDERERS = {"json": render_json, "csv": render_csv, "table": render_table}


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(list(argv)))
    try:
        doc = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"hclat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        if args.format == "json":
            error_doc = {
                "error": {"type": type(exc).__name__, "message": str(exc)}
            }
            _emit(render_json(error_doc), args.out)
        else:
            print(f"hclat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(_RENDERERS[args.format](doc), args.out)
    if args.command == "verify" and not doc["passed"]:
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
