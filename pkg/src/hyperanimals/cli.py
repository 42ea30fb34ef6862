"""Command-line front end.

Exit codes: 0 success, 1 verification failure, exhausted budget or I/O
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .context import TessClass, layer_index, new_context
from .errors import BudgetExceededError, HyperAnimalsError
from .perimeter import epsilon, m_closed, pmin, pmin_layers
from .spiral import grow_to, new_animal, perimeter_sequence
from .words import (
    continued_fraction_closed,
    sturmian_prefix,
    substitute_degree_word,
    uw_words,
)

FIELDS = ["p", "q", "n", "pmin", "k", "m", "epsilon"]
EPS_DIGITS = 20


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    p: int
    q: int
    n: int
    p_min: int
    k: int | None = None
    m: int | None = None
    epsilon_decimal: str | None = None
    source: str = "closed"

    def row(self) -> list:
        cells = [self.p, self.q, self.n, self.p_min, self.k, self.m, self.epsilon_decimal]
        return ["" if c is None else c for c in cells]

    def as_json(self) -> dict:
        d = asdict(self)
        d["pmin"] = d.pop("p_min")
        d["epsilon"] = d.pop("epsilon_decimal")
        return d


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _planar(p: int, q: int):
    try:
        ctx = new_context(p, q)
    except HyperAnimalsError as exc:
        raise UsageError(str(exc))
    if ctx.cls is TessClass.SPHERICAL:
        raise UsageError(f"{{{p},{q}}} is spherical; only Euclidean and hyperbolic signatures are supported")
    return ctx


def make_record(ctx, n: int) -> OutputRecord:
    if ctx.is_euclidean:
        return OutputRecord(ctx.p, ctx.q, n, pmin(ctx, n))
    # the layer index starts at n = 2
    k = layer_index(ctx, n) if n > 1 else None
    if n <= ctx.p * (ctx.q - 2):
        return OutputRecord(ctx.p, ctx.q, n, pmin(ctx, n), k)
    br = m_closed(ctx, n)
    eps = epsilon(ctx, n).to_decimal(EPS_DIGITS)
    return OutputRecord(ctx.p, ctx.q, n, br.p_min, br.k, br.m, str(eps))


def _emit(records, fmt: str, out) -> None:
    if fmt == "json":
        data = [r.as_json() for r in records]
        json.dump(data[0] if len(data) == 1 else data, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(FIELDS)
        for r in records:
            w.writerow(r.row())
    else:
        for r in records:
            parts = [f"{k}={v}" for k, v in zip(FIELDS, r.row()) if v != ""]
            out.write(" ".join(parts) + f" source={r.source}\n")


# -- commands ----------------------------------------------------------------


def cmd_pmin(args, out) -> int:
    ctx = _planar(args.p, args.q)
    rec = make_record(ctx, args.n)
    records = [rec]
    if args.verify:
        sim = perimeter_sequence(ctx, args.n)[-1]
        records.append(OutputRecord(ctx.p, ctx.q, args.n, sim, rec.k, source="simulator"))
        if ctx.is_hyperbolic and args.n > ctx.p * (ctx.q - 2):
            records.append(OutputRecord(ctx.p, ctx.q, args.n, pmin_layers(ctx, args.n), rec.k, source="layers"))
        bad = [r for r in records if r.p_min != rec.p_min]
        if bad:
            for r in bad:
                print(f"mismatch: closed={rec.p_min} {r.source}={r.p_min}", file=sys.stderr)
            _emit(records, args.format, out)
            return 1
    _emit(records, args.format, out)
    return 0


def cmd_table(args, out) -> int:
    if args.n_from > args.n_to:
        raise UsageError(f"empty range {args.n_from}..{args.n_to}")
    ctx = _planar(args.p, args.q)
    records = [make_record(ctx, n) for n in range(args.n_from, args.n_to + 1)]
    _emit(records, args.format, out)
    if args.plot:
        from .plotting import plot_pmin

        plot_pmin(ctx, args.n_from, args.n_to, args.plot)
    return 0


def cmd_words(args, out) -> int:
    ctx = _planar(args.p, args.q)
    ctx.require_hyperbolic()
    kind = args.kind
    if kind == "cf":
        out.write(str(continued_fraction_closed(ctx)) + "\n")
        return 0
    if args.index is None:
        raise UsageError(f"words {kind} needs K (layer) or N (prefix length)")
    if kind == "d":
        word = substitute_degree_word(ctx, args.index)
    elif kind in ("u", "w"):
        u, w = uw_words(ctx, args.index)
        word = u if kind == "u" else w
    else:
        word = sturmian_prefix(ctx, args.index)
    out.write(str(word) + "\n")
    return 0


def _parse_pq(text: str):
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pq expects P,Q, got {text!r}")
    ctx = _planar(p, q)
    if not ctx.is_hyperbolic:
        raise UsageError(f"--pq {p},{q} is not hyperbolic")
    return p, q


def cmd_verify(args, out) -> int:
    from .verify import run_all

    sigs = [_parse_pq(x) for x in args.pq] if args.pq else None
    results = run_all(signatures=sigs, n_max=args.nmax, quick=args.quick)
    for r in results:
        out.write(r.line() + "\n")
        for f in r.failures:
            out.write(f"    {f}\n")
    if args.report_dir:
        from .plotting import write_report_figures

        d = Path(args.report_dir)
        d.mkdir(parents=True, exist_ok=True)
        with open(d / "verify.csv", "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["check", "passed", "detail", "seconds"])
            for r in results:
                w.writerow([r.name, int(r.passed), r.detail, f"{r.seconds:.3f}"])
        for p, q in sigs or [(3, 7), (4, 5), (7, 3)]:
            ctx = new_context(p, q)
            write_report_figures(ctx, args.nmax or min(ctx.n_k(5), 2000), d)
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def cmd_render(args, out) -> int:
    from .render import state_to_svg

    ctx = _planar(args.p, args.q)
    state = grow_to(new_animal(ctx), args.n)
    Path(args.out).write_text(state_to_svg(state, hyperbolic=ctx.is_hyperbolic), encoding="utf-8")
    if args.json:
        Path(args.json).write_text(state.to_json(indent=1), encoding="utf-8")
    out.write(f"wrote {args.out} ({state.n} tiles, perimeter {state.perimeter})\n")
    return 0


# -- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hyperanimals", description="Minimal perimeters of animals on {p,q} tessellations.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sig(sp):
        sp.add_argument("p", type=_positive)
        sp.add_argument("q", type=_positive)

    sp = sub.add_parser("pmin", help="minimal perimeter of n tiles")
    sig(sp)
    sp.add_argument("n", type=_positive)
    sp.add_argument("--verify", action="store_true", help="cross-check against the simulator and layer path")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv")
    sp.set_defaults(func=cmd_pmin, format="text")

    sp = sub.add_parser("table", help="pmin rows for a range of n")
    sig(sp)
    sp.add_argument("n_from", type=_positive)
    sp.add_argument("n_to", type=_positive)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--plot", metavar="PATH", help="also save a pmin figure")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("words", help="degree, Sturmian and continued-fraction words")
    sig(sp)
    sp.add_argument("kind", choices=["d", "u", "w", "sturmian", "cf"])
    sp.add_argument("index", nargs="?", type=_positive, metavar="K_OR_N")
    sp.set_defaults(func=cmd_words)

    sp = sub.add_parser("verify", help="run the verification sweeps")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument("--pq", action="append", metavar="P,Q")
    sp.add_argument("--nmax", type=_positive)
    sp.add_argument("--report-dir", metavar="DIR")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="SVG of the spiral animal")
    sig(sp)
    sp.add_argument("n", type=_positive)
    sp.add_argument("out")
    sp.add_argument("--json", metavar="SNAP", help="also write the combinatorial snapshot")
    sp.set_defaults(func=cmd_render)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"hyperanimals: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"hyperanimals: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"hyperanimals: I/O error: {exc}", file=sys.stderr)
        return 1
    except HyperAnimalsError as exc:
        print(f"hyperanimals: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
