"""Command line front end.

Every command reads and writes the dense-table text format on stdin/stdout
(or via --in/--out) and processes each function in the input stream in turn.
Exit codes: 0 success, 1 domain error, 2 usage or parse error, 3 when
``verify`` finds failures.
"""

from __future__ import annotations

import argparse
import sys

from . import core, minors
from .classify import (
    classify as classify_general,
    classify_boolean,
    classify_pseudo_boolean,
    render_classification,
)
from .core import FiniteFunction, FunctionFormatError, parse_stream, render
from .gap import arity_gap, quasi_arity
from .oddsupp import is_determined_by_oddsupp, is_restriction_determined_by_oddsupp
from .oracle import (
    SweepSpec,
    THEOREMS,
    function_by_id,
    gen_oddsupp_determined,
    gen_quasi_m_ary,
    gen_salomaa,
    render_report,
    verify,
    _resolve_budget,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aritygap",
        description="Essential variables, minors, quasi-arity and arity gap "
        "of finite functions given as dense tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_options(p):
        p.add_argument("--in", dest="infile", help="input path (default: stdin)")
        p.add_argument("--out", dest="outfile", help="output path (default: stdout)")

    p = sub.add_parser("analyze", help="essential arity, quasi-arity, essl and gap")
    io_options(p)

    p = sub.add_parser("classify", help="gap with its structural rationale")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--boolean", action="store_true", help="k = b = 2 family recognizer")
    group.add_argument(
        "--pseudo-boolean", action="store_true", help="k = 2, arbitrary codomain"
    )
    io_options(p)

    p = sub.add_parser("minor", help="apply a variable substitution")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--identify", metavar="I,J", help="feed slot I from slot J")
    group.add_argument("--sigma", metavar="S1,S2,...", help="target slot fed to each source slot")
    group.add_argument("--diagonal", action="store_true", help="unary a -> f(a,...,a)")
    p.add_argument("--target-arity", type=int, help="arity of the --sigma minor")
    io_options(p)

    p = sub.add_parser("oddsupp-check", help="is the function determined by oddsupp")
    p.add_argument(
        "--restricted",
        action="store_true",
        help="test the restriction to tuples with a repeated coordinate",
    )
    io_options(p)

    p = sub.add_parser("gen", help="construct a witness function")
    gen_sub = p.add_subparsers(dest="generator", required=True)
    g = gen_sub.add_parser("salomaa", help="gap equals the domain size")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--out", dest="outfile")
    g = gen_sub.add_parser("quasi", help="quasi-m-ary, all slots essential")
    for flag in ("--k", "--n", "--b", "--m", "--seed"):
        g.add_argument(flag, type=int, required=flag != "--seed", default=0)
    g.add_argument("--out", dest="outfile")
    g = gen_sub.add_parser("oddsupp", help="oddsupp-determined restriction, quasi-arity n")
    for flag in ("--k", "--n", "--b", "--seed"):
        g.add_argument(flag, type=int, required=flag != "--seed", default=0)
    g.add_argument("--out", dest="outfile")

    p = sub.add_parser("enumerate", help="stream every function over k, n, b")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--filter", help="gap=G or qa=M")
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; output is canonical")
    p.add_argument("--out", dest="outfile")

    p = sub.add_parser("verify", help="run a named property sweep")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", dest="outfile")

    return parser


def _read_functions(args) -> list[FiniteFunction]:
    if getattr(args, "infile", None):
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    fns = parse_stream(text)
    if not fns:
        raise FunctionFormatError("no function in input")
    return fns


class _Output:
    def __init__(self, args):
        self.path = getattr(args, "outfile", None)
        self.fh = open(self.path, "w", encoding="utf-8") if self.path else sys.stdout

    def write(self, text: str):
        self.fh.write(text)

    def close(self):
        if self.path:
            self.fh.close()


def _parse_slots(text: str, count: int | None = None) -> tuple[int, ...]:
    try:
        slots = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(slots) != count:
        raise ValueError(f"expected {count} comma-separated integers, got {text!r}")
    return slots


def _cmd_analyze(args, out: _Output) -> int:
    for f in _read_functions(args):
        r = arity_gap(f)
        out.write(
            f"ess={r.ess} qa={r.qa} essl={r.essl} gap={r.gap} "
            f"pair={r.pair[0]},{r.pair[1]}\n"
        )
    return 0


def _cmd_classify(args, out: _Output) -> int:
    for f in _read_functions(args):
        if args.boolean:
            c = classify_boolean(f)
        elif args.pseudo_boolean:
            c = classify_pseudo_boolean(f)
        else:
            c = classify_general(f)
        out.write(render_classification(c) + "\n")
    return 0


def _cmd_minor(args, out: _Output) -> int:
    for f in _read_functions(args):
        if args.diagonal:
            result = minors.diagonal(f)
        elif args.identify:
            i, j = _parse_slots(args.identify, 2)
            result = minors.identification_minor(f, i, j)
        else:
            if args.target_arity is None:
                raise ValueError("--sigma needs --target-arity")
            sigma = _parse_slots(args.sigma)
            result = minors.simple_minor(
                f, minors.MinorMap(len(sigma), args.target_arity, sigma)
            )
        out.write(render(result))
    return 0


def _render_tuple(t: tuple[int, ...]) -> str:
    return "-".join(str(v) for v in t)


def _cmd_oddsupp_check(args, out: _Output) -> int:
    for f in _read_functions(args):
        if args.restricted:
            profile = is_restriction_determined_by_oddsupp(f)
        else:
            profile = is_determined_by_oddsupp(f)
        parts = [f"determined={int(profile.determined)}"]
        if profile.witness is not None:
            parts.append(
                f"witness={_render_tuple(profile.witness[0])},{_render_tuple(profile.witness[1])}"
            )
        else:
            parts.append(f"star_constant={int(profile.star_constant)}")
            parts.append(
                "star=" + ",".join(f"{m}:{v}" for m, v in sorted(profile.star.items()))
            )
        out.write(" ".join(parts) + "\n")
    return 0


def _cmd_gen(args, out: _Output) -> int:
    if args.generator == "salomaa":
        f = gen_salomaa(args.k)
    elif args.generator == "quasi":
        f = gen_quasi_m_ary(args.k, args.n, args.b, args.m, args.seed)
    else:
        f = gen_oddsupp_determined(args.k, args.n, args.b, args.seed)
    out.write(render(f))
    return 0


def _cmd_enumerate(args, out: _Output) -> int:
    total = args.b ** (args.k**args.n)
    budget = _resolve_budget(None)
    if total > budget:
        raise core.OracleInfeasibleError(f"{total} tables exceed the budget {budget}")
    want = None
    if args.filter:
        key, _, value = args.filter.partition("=")
        if key not in ("gap", "qa") or not value.lstrip("-").isdigit():
            raise ValueError(f"unknown filter {args.filter!r}, expected gap=G or qa=M")
        want = (key, int(value))
    for ident in range(total):
        f = function_by_id(args.k, args.n, args.b, ident)
        if want is not None:
            key, value = want
            if key == "qa":
                if quasi_arity(f) != value:
                    continue
            else:
                try:
                    if arity_gap(f).gap != value:
                        continue
                except core.GapUndefinedError:
                    continue
        out.write(render(f))
    return 0


def _cmd_verify(args, out: _Output) -> int:
    spec = SweepSpec(
        theorem=args.theorem,
        k=args.k,
        n=args.n,
        b=args.b,
        mode="exhaustive" if args.exhaustive else "sampled",
        samples=None if args.exhaustive else args.samples,
        seed=None if args.exhaustive else args.seed,
    )
    report = verify(spec, jobs=args.jobs)
    out.write(render_report(report))
    return 3 if report.failures else 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "classify": _cmd_classify,
    "minor": _cmd_minor,
    "oddsupp-check": _cmd_oddsupp_check,
    "gen": _cmd_gen,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    out = _Output(args)
    try:
        return _COMMANDS[args.command](args, out)
    except FunctionFormatError as exc:
        print(f"aritygap: {exc}", file=sys.stderr)
        return 2
    except core.ArityGapError as exc:
        print(f"aritygap: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"aritygap: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    finally:
        out.close()


def run() -> None:
    sys.exit(main())
