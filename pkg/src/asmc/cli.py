"""Command-line front end.

Every subcommand is a thin adapter over one library operation (or a
short composition); no arithmetic lives here.  Matrices travel as the
text format (one row per line, ``#`` comments allowed) or as JSON;
tuples, pairs, tables and path configurations use their module-declared
JSON schemas.  Commands read a file argument or stdin and write stdout
(or ``-o``), so they compose in shell pipes.

Exit codes: 0 success, 1 usage error, 2 domain error (the error class
name and any 1-based position appear in the message).  ``verify`` exits
2 when a property fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cells import charges
from .discharge import discharge, recharge, tuple_from_json
from .enumeration import DEFAULT_CAP, DISTRIBUTION_KEYS, distribution, enumerate_asm
from .errors import AsmcError, ParseError
from .inv_table import (
    gen_table,
    pair_from_table,
    table_from_json,
    table_from_text,
    table_params,
)
from .matrix import (
    classical_params,
    matrix_from_json,
    matrix_from_text,
    matrix_to_json,
    matrix_to_text,
    minus_count,
    reflect,
)
from .neutral import neutralize, pair_from_json, restore, swap_charges
from .paths import (
    config_from_json,
    config_from_pair,
    config_params,
    dual_config,
    pair_from_config,
    render_ascii,
    render_svg,
    validate_config,
)
from .verify import verify_suite


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_input(args) -> str:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _read_matrix(args):
    text = _read_input(args)
    if text.lstrip().startswith("{"):
        return matrix_from_json(text)
    return matrix_from_text(text)


def _read_json(args) -> dict:
    text = _read_input(args)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON input: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    return obj


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params_lines(m) -> list[str]:
    p = classical_params(m)
    lines = [f"r={p.r}", f"s={p.s}", f"i={p.i}"]
    if p.s == 1:
        ch = charges(m)
        lines += [f"E={ch.e}", f"B={ch.b}", f"J={ch.j}"]
    return lines


def _params_dict(m) -> dict:
    p = classical_params(m)
    out = {"r": p.r, "s": p.s, "i": p.i}
    if p.s == 1:
        ch = charges(m)
        out.update({"E": ch.e, "B": ch.b, "J": ch.j})
    return out


def _emit_matrix(args, m) -> None:
    if args.format == "json":
        _write(args, json.dumps(matrix_to_json(m)) + "\n")
    else:
        _write(args, matrix_to_text(m))


def _pipeline_bundle(m) -> dict:
    """All four representations of a one-minus matrix plus its statistics,
    cross-checked for agreement before emitting."""
    pair = neutralize(m)
    table = gen_table(pair)
    cfg = config_from_pair(pair)
    p, ch = classical_params(m), charges(m)
    stats = (p.r, p.i, ch.e, ch.b, ch.j)
    for label, vec in (
        ("table", table_params(table)),
        ("paths", config_params(cfg)),
    ):
        if tuple(vec) != stats:
            raise AsmcError(f"{label} statistics {tuple(vec)} disagree with matrix {stats}")
    if restore(pair) != m or pair_from_table(table) != pair or pair_from_config(cfg) != pair:
        raise AsmcError("representations do not round-trip")
    return {
        "matrix": matrix_to_json(m),
        "pair": pair.to_json(),
        "table": table.to_json(),
        "paths": cfg.to_json(),
        "params": _params_dict(m),
    }


def build_parser() -> _Parser:
    parser = _Parser(prog="asmc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, fmt=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        return p

    add("validate", "check a matrix against the alternating sign laws")
    add("params", "print r, s, i (and E, B, J for one-minus matrices)")
    add("reflect", "vertical reflection")
    add("discharge", "matrix -> (k, P, c, E) tuple", fmt=("json", "text"))
    add("recharge", "(k, P, c, E) tuple JSON -> matrix")
    add("neutralize", "matrix -> (neutral matrix, charge) pair", fmt=("json",))
    add("restore", "(neutral matrix, charge) pair JSON -> matrix")
    add("prime", "swap the electric and magnetic charges")
    add("table", "matrix -> generalized inversion table")
    add("from-table", "generalized inversion table -> matrix")
    add("paths", "matrix -> mixed path configuration", fmt=("json", "ascii", "svg"))
    add("dual", "configuration JSON -> its path dual", fmt=("json", "ascii", "svg"))
    add("pipeline", "matrix -> all representations as one JSON bundle", fmt=("json",))

    p = sub.add_parser("enumerate", help="stream all order-n matrices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", "--minus-ones", type=int, default=None)
    p.add_argument("--count", action="store_true", help="print only the total")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("-o", "--output")

    p = sub.add_parser("dist", help="distribution of statistics over order n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--keys", required=True, help=f"comma-separated subset of {','.join(DISTRIBUTION_KEYS)}")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="run the exhaustive property sweep")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("-o", "--output")
    return parser


def _resolve_cap(args) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("ASMC_CAP")
    return int(env) if env else DEFAULT_CAP


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "validate":
        m = _read_matrix(args)
        _write(args, f"ok: n={m.n} s={minus_count(m)}\n")
    elif cmd == "params":
        m = _read_matrix(args)
        if args.format == "json":
            _write(args, json.dumps(_params_dict(m)) + "\n")
        else:
            _write(args, "\n".join(_params_lines(m)) + "\n")
    elif cmd == "reflect":
        _emit_matrix(args, reflect(_read_matrix(args)))
    elif cmd == "discharge":
        t = discharge(_read_matrix(args))
        if args.format == "text":
            _write(
                args,
                f"k={t.opening_row} c={t.closing_sum} E={t.charge}\n"
                + matrix_to_text(t.perm),
            )
        else:
            _write(args, json.dumps(t.to_json()) + "\n")
    elif cmd == "recharge":
        _emit_matrix(args, recharge(tuple_from_json(_read_json(args))))
    elif cmd == "neutralize":
        _write(args, json.dumps(neutralize(_read_matrix(args)).to_json()) + "\n")
    elif cmd == "restore":
        _emit_matrix(args, restore(pair_from_json(_read_json(args))))
    elif cmd == "prime":
        _emit_matrix(args, swap_charges(_read_matrix(args)))
    elif cmd == "table":
        t = gen_table(neutralize(_read_matrix(args)))
        if args.format == "json":
            _write(args, json.dumps(t.to_json()) + "\n")
        else:
            _write(args, t.to_text() + "\n")
    elif cmd == "from-table":
        text = _read_input(args)
        t = table_from_json(json.loads(text)) if text.lstrip().startswith("{") else table_from_text(text)
        _emit_matrix(args, restore(pair_from_table(t)))
    elif cmd == "paths":
        cfg = config_from_pair(neutralize(_read_matrix(args)))
        _emit_config(args, cfg)
    elif cmd == "dual":
        cfg = dual_config(config_from_json(_read_json(args)))
        _emit_config(args, cfg)
    elif cmd == "pipeline":
        _write(args, json.dumps(_pipeline_bundle(_read_matrix(args)), indent=2) + "\n")
    elif cmd == "enumerate":
        cap = _resolve_cap(args)
        if args.count:
            total = sum(1 for _ in enumerate_asm(args.n, s=args.minus_ones, cap=cap))
            _write(args, f"{total}\n")
        else:
            stream = enumerate_asm(args.n, s=args.minus_ones, cap=cap)
            sink = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
            try:
                for idx, m in enumerate(stream):
                    if idx:
                        sink.write("\n")
                    sink.write(matrix_to_text(m))
            finally:
                if args.output:
                    sink.close()
    elif cmd == "dist":
        keys = tuple(k.strip() for k in args.keys.split(","))
        counts = distribution(args.n, keys, cap=_resolve_cap(args))
        if args.format == "json":
            payload = [{"values": list(k), "count": v} for k, v in sorted(counts.items())]
            _write(args, json.dumps({"n": args.n, "keys": list(keys), "counts": payload}) + "\n")
        else:
            lines = [
                " ".join(f"{key}={val}" for key, val in zip(keys, vals)) + f" count={count}"
                for vals, count in sorted(counts.items())
            ]
            _write(args, "\n".join(lines) + "\n")
    elif cmd == "verify":
        report = verify_suite(args.n_max, cap=_resolve_cap(args))
        _write(args, report.to_json() + "\n" if args.format == "json" else report.to_text())
        if not report.ok:
            return 2
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(cmd)
    return 0


def _emit_config(args, cfg) -> None:
    problems = validate_config(cfg)
    if problems:
        raise AsmcError(f"configuration invalid: {problems[0]}")
    if args.format == "ascii":
        _write(args, render_ascii(cfg))
    elif args.format == "svg":
        _write(args, render_svg(cfg))
    else:
        _write(args, json.dumps(cfg.to_json()) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except AsmcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: ParseError: invalid JSON: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
